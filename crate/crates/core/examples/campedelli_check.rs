//! Checks the bundled labeled arrangements.
//!
//! `cargo run --example campedelli_check [FILE...]`

use std::path::PathBuf;

use plurican::arrangements::{analyze_extension, check_campedelli, LabeledArrangement};

fn main() -> plurican::Result<()> {
    let mut files: Vec<PathBuf> = std::env::args_os().skip(1).map(PathBuf::from).collect();
    if files.is_empty() {
        let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
        for name in [
            "campedelli_generic",
            "campedelli_fourfold",
            "campedelli_zero_sum_triple",
            "extension_type_one",
            "extension_type_two",
            "extension_not_even",
        ] {
            files.push(dir.join(format!("{name}.json")));
        }
    }
    for f in files {
        let text = std::fs::read_to_string(&f)?;
        let arr = LabeledArrangement::from_json_str(&text)?;
        let name = f.file_name().unwrap_or_default().to_string_lossy();
        match arr.lines().len() {
            7 => {
                let r = check_campedelli(&arr)?;
                println!("{name}: passed={} violations={}", r.passed, serde_json::to_string(&r.violations)?);
            }
            _ => {
                let r = analyze_extension(&arr)?;
                println!(
                    "{name}: sum_zero={} totally_even={} type={} generic={}",
                    r.sum_zero, r.totally_even, r.kind.tag(), r.generic
                );
            }
        }
    }
    Ok(())
}
