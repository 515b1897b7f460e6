//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! fails. All comparisons are exact; runtime budgets are listed per check.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use plurican::arrangements::{check_campedelli, compute_incidences, Violation};
use plurican::catalog::lookup;
use plurican::evenclass::verify_lemma_ev;
use plurican::invariants::{
    composed_canonical_degree, covering_invariants, moduli_dimension, moduli_dimension_lower_bound,
    CoveringParams, SurfaceInvariants,
};
use plurican::torsion::{
    cnew_component_count, covering_count, cplus_total, is_divisible, theorem_mod_component_bound,
    tor_d_order, AutAction, FiniteAbelianGroup,
};
use plurican::Error;

use common::{brute_divisible, brute_tor, cli_invocations, det3, load_arrangement, matrix_from_pairs, run_bin};

/// Fixed so that every run draws the same random cases.
const SEED: u64 = 0x5eed_2024;

type Check = std::result::Result<String, String>;

/// Criterion number, name, check and runtime budget.
type Criterion = (u32, &'static str, fn() -> Check, Duration);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err(e: Error) -> String {
    format!("{} error: {e}", e.kind())
}

fn even_set_census() -> Check {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().map_err(|e| e.to_string())?;
    let r = pool.install(verify_lemma_ev).map_err(err)?;
    ensure!(r.orbit_count == 2, "{} orbits", r.orbit_count);
    ensure!(r.burnside_orbit_count == 2, "Burnside count {}", r.burnside_orbit_count);
    ensure!(r.total_count == r.oracle_count, "filter {} vs null space {}", r.total_count, r.oracle_count);
    // Pinned from the null-space oracle: weight-8 words of the even-weight Hamming code.
    ensure!(r.total_count == 435, "N8 = {}", r.total_count);
    ensure!(r.type_constant_on_orbits, "type varies on an orbit");
    let one = r.orbits.iter().find(|o| o.kind == "TypeI").ok_or("no TypeI orbit")?;
    ensure!(one.size == 15, "TypeI orbit size {}", one.size);
    let sizes: Vec<u64> = r.orbits.iter().map(|o| o.size).collect();
    Ok(format!("N8={} orbits={} sizes={sizes:?} single-threaded", r.total_count, r.orbit_count))
}

fn campedelli_invariants() -> Check {
    let x = SurfaceInvariants::from_pa(1, 0, 2).map_err(err)?;
    let y = covering_invariants(&x, &CoveringParams::new(2, 1).map_err(err)?).map_err(err)?;
    ensure!((y.k2, y.pa, y.pg, y.q) == (16, 4, 3, 0), "got {y:?}");
    Ok(format!("K2_Y={} pa_Y={} pg_Y={}", y.k2, y.pa, y.pg))
}

fn canonical_degrees() -> Check {
    let mut seen = Vec::new();
    for (name, base, expected) in [("campedelli", 8, 16), ("burniat-3", 4, 8), ("mendes-lopes-pardini", 2, 4)] {
        let entry = lookup(name).map_err(err)?;
        ensure!(entry.bicanonical_map_degree == Some(base), "{name}: base degree {:?}", entry.bicanonical_map_degree);
        let d = composed_canonical_degree(base).map_err(err)?;
        ensure!(d == expected, "{name}: {base} -> {d}");
        seen.push(format!("{base}->{d}"));
    }
    Ok(seen.join(", "))
}

fn noether_suite() -> Check {
    let mut rng = StdRng::seed_from_u64(SEED);
    let n = 1000;
    for _ in 0..n {
        let (pa, k2) = (rng.gen_range(1..=50), rng.gen_range(1..=400));
        let (d, m) = (rng.gen_range(2..=7), rng.gen_range(1..=6));
        let correction = d * (d - 1) * m * ((2 * d - 1) * m + 3) * k2;
        ensure!(correction % 12 == 0, "div-by-12 fails at d={d} m={m} K2={k2}");
        let x = SurfaceInvariants::from_pa(pa, 0, k2).map_err(err)?;
        let y = covering_invariants(&x, &CoveringParams::new(d, m).map_err(err)?).map_err(err)?;
        ensure!(y.k2 + y.e == 12 * y.pa, "Noether fails for pa={pa} K2={k2} d={d} m={m}: {y:?}");
    }
    Ok(format!("{n} tuples, 0 failures"))
}

fn torsion_oracles() -> Check {
    let mut rng = StdRng::seed_from_u64(SEED ^ 1);
    let mut cases = 0;
    while cases < 500 {
        let rank = rng.gen_range(1..=4);
        let orders: Vec<u64> = (0..rank).map(|_| rng.gen_range(2..=24)).collect();
        if orders.iter().product::<u64>() > 10_000 {
            continue;
        }
        let g = FiniteAbelianGroup::new(orders).map_err(err)?;
        let d = rng.gen_range(1..=12);
        let a = g.element_at(rng.gen_range(0..g.order() as usize));
        ensure!(tor_d_order(&g, d).map_err(err)? == brute_tor(&g, d), "tor_d {:?} d={d}", g.cyclic_orders());
        ensure!(
            is_divisible(&g, &a, d).map_err(err)? == brute_divisible(&g, &a, d),
            "divisibility of {:?} in {:?} by {d}",
            a.coords(),
            g.cyclic_orders()
        );
        cases += 1;
    }
    let camp = FiniteAbelianGroup::homocyclic(2, 3).map_err(err)?;
    let count = covering_count(&camp, 2).map_err(err)?;
    ensure!(count == 8, "covering_count((Z/2)^3, 2) = {count}");
    Ok(format!("{cases} random cases agree; covering_count((Z/2)^3, 2) = {count}"))
}

fn component_counts() -> Check {
    let camp = FiniteAbelianGroup::homocyclic(2, 3).map_err(err)?;
    let bound = theorem_mod_component_bound(&camp, 2).map_err(err)?;
    ensure!(bound == 2, "theorem bound {bound}");
    let total = cplus_total(2, 3).map_err(err)?;
    ensure!(total == 46875 && total == 3 * 5u64.pow(6), "cplus_total(2,3) = {total}");
    let g = FiniteAbelianGroup::homocyclic(5, 6).map_err(err)?;
    let trivial = [AutAction::identity()];
    let mut rejected = Vec::new();
    for d in 2..=26u64 {
        let r = cnew_component_count(&g, &trivial, d, 5);
        let coprime = (d - 1) % 5 != 0;
        match r {
            Ok(n) => ensure!(coprime && n == 15625, "d={d}: accepted with {n}"),
            Err(Error::HypothesisViolation(_)) => {
                ensure!(!coprime, "d={d}: rejected although gcd(d-1, 5^6) = 1");
                rejected.push(d);
            }
            Err(e) => return Err(err(e)),
        }
    }
    Ok(format!("bound=2, cplus=46875, cnew rejects d in {rejected:?}"))
}

fn moduli_dimensions() -> Check {
    let mut rng = StdRng::seed_from_u64(SEED ^ 2);
    for _ in 0..100 {
        let x = SurfaceInvariants::new(rng.gen_range(0..=60), 0, rng.gen_range(1..=400)).map_err(err)?;
        let m = rng.gen_range(3..=10);
        let exact = moduli_dimension(m, &x).map_err(err)?;
        let bound = moduli_dimension_lower_bound(&CoveringParams::new(2, m).map_err(err)?, &x).map_err(err)?;
        ensure!(exact == bound, "m={m} {x:?}: {exact} vs {bound}");
    }
    let fpp = lookup("fake-projective-plane").map_err(err)?.invariants;
    let dim = moduli_dimension(3, &fpp).map_err(err)?;
    ensure!(dim == 135, "fake projective plane, m=3: {dim}");
    Ok(format!("100 random inputs agree; fake projective plane m=3 -> {dim}"))
}

fn arrangement_exactness() -> Check {
    let arr = load_arrangement("dual_hesse.json");
    let r = compute_incidences(&arr).map_err(err)?;
    ensure!(r.histogram == BTreeMap::from([(3, 12)]), "histogram {:?}", r.histogram);
    let pairs: usize = r.points.iter().map(|p| p.multiplicity * (p.multiplicity - 1) / 2).sum();
    ensure!(pairs == 36, "pair count {pairs}");
    let mut rng = StdRng::seed_from_u64(SEED ^ 3);
    let mut tried = 0;
    while tried < 20 {
        let entries: Vec<(i64, i64)> = (0..9).map(|_| (rng.gen_range(-4..=4), rng.gen_range(-2..=2))).collect();
        let m = matrix_from_pairs(&entries);
        if det3(&m).is_zero() {
            continue;
        }
        let moved = compute_incidences(&arr.transform(&m).map_err(err)?).map_err(err)?;
        ensure!(moved.histogram == r.histogram, "histogram changed to {:?}", moved.histogram);
        tried += 1;
    }
    Ok(format!("12 triple points, sum C(r,2) = {pairs}, {tried} random matrices keep the histogram"))
}

fn campedelli_checker() -> Check {
    let generic = check_campedelli(&load_arrangement("campedelli_generic.json")).map_err(err)?;
    ensure!(generic.passed, "generic fixture fails: {:?}", generic.violations);

    let four = check_campedelli(&load_arrangement("campedelli_fourfold.json")).map_err(err)?;
    ensure!(!four.passed, "fourfold fixture passes");
    let ok_four = matches!(
        four.violations.as_slice(),
        [Violation::HighMultiplicity { lines, multiplicity: 4, point }]
            if lines == &vec![0, 1, 2, 3] && point == &plurican::arrangements::ProjPoint::from_ints([0, 0, 1]).unwrap()
    );
    ensure!(ok_four, "fourfold witnesses {:?}", four.violations);

    let zero = check_campedelli(&load_arrangement("campedelli_zero_sum_triple.json")).map_err(err)?;
    let ok_zero = match zero.violations.as_slice() {
        [Violation::ZeroSumTriple { lines, labels, .. }] => {
            lines == &vec![0, 1, 2] && labels.iter().fold(0, |acc, l| acc ^ l.encoding()) == 0
        }
        _ => false,
    };
    ensure!(!zero.passed && ok_zero, "zero-sum witnesses {:?}", zero.violations);
    Ok("generic passes; 4-fold point at (0:0:1) on lines 0-3; zero-sum triple on lines 0-2".into())
}

fn determinism() -> Check {
    let invocations = cli_invocations();
    for args in &invocations {
        let reference = run_bin(args);
        ensure!(reference.code == 0 || reference.code == 1, "{args:?} exited {}", reference.code);
        ensure!(!reference.stdout.is_empty(), "{args:?} printed nothing");
        for _ in 0..2 {
            ensure!(run_bin(args).stdout == reference.stdout, "{args:?} differs between runs");
        }
        for workers in ["1", "4"] {
            let mut with = vec!["--workers".to_string(), workers.to_string()];
            with.extend(args.iter().cloned());
            let r = run_bin(&with);
            ensure!(r.code == reference.code && r.stdout == reference.stdout, "{with:?} differs");
        }
    }
    Ok(format!("{} invocations x (3 runs + workers 1, 4) byte-identical", invocations.len()))
}

fn main() {
    let checks: [Criterion; 10] = [
        (1, "totally even 8-set census", even_set_census, Duration::from_secs(10)),
        (2, "Campedelli covering invariants", campedelli_invariants, Duration::from_secs(1)),
        (3, "canonical-map degree chain", canonical_degrees, Duration::from_secs(1)),
        (4, "covering formulas satisfy Noether", noether_suite, Duration::from_secs(1)),
        (5, "torsion oracle suite", torsion_oracles, Duration::from_secs(30)),
        (6, "component counts", component_counts, Duration::from_secs(5)),
        (7, "moduli dimensions", moduli_dimensions, Duration::from_secs(1)),
        (8, "arrangement exactness", arrangement_exactness, Duration::from_secs(1)),
        (9, "Campedelli checker fixtures", campedelli_checker, Duration::from_secs(1)),
        (10, "CLI determinism", determinism, Duration::from_secs(300)),
    ];
    let mut failed = 0;
    for (id, name, check, budget) in checks {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > budget => {
                Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}"))
            }
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS [{id:>2}] {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL [{id:>2}] {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    println!("{} of {} criteria passed", 10 - failed, 10);
    if failed > 0 {
        std::process::exit(1);
    }
}
