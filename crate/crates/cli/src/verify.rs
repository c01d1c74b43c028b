//! Verification suites: each re-runs one family of theorem-backed checks and
//! reports pass/fail with case counts. Instances are independent, so suites
//! fan out over a rayon pool; KSCHUR_THREADS caps the worker count.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use kschur_core::characters::{chi_table, chi_tilde_table, orthogonality_failure};
use kschur_core::cores::{
    act_generator, bounded_from_core, core_from_bounded, is_core, k_conjugate, BoundedPartition,
    Core,
};
use kschur_core::enumerate::{bounded_partitions_up_to, partitions};
use kschur_core::kschur::{
    classical_mn, k_pieri_strips, k_pieri_words, mn_ribbons, mn_word_pairs, mn_words, apply,
    KSchurExpansion,
};
use kschur_core::ncsf;
use kschur_core::nilcoxeter::{
    element_from_word, elements_up_to_length, enumerate_hook_words, hook_factorize,
    hook_word_ascents, is_k_connected,
};
use kschur_core::partition::{Partition, SkewShape};
use kschur_core::tables::{golden_chi_tables, golden_chi_tilde_tables};

pub struct Check {
    pub name: String,
    pub cases: u64,
    pub failures: Vec<String>,
}

pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

pub fn configure_threads() {
    if let Ok(raw) = std::env::var("KSCHUR_THREADS") {
        if let Ok(threads) = raw.parse::<usize>() {
            if threads >= 1 {
                // Ignore the error if a global pool already exists.
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

pub fn run_suite(name: &str, k_max: Option<usize>, n_max: Option<u32>) -> Result<Report, String> {
    let checks = match name {
        "tables" => suite_tables(),
        "equivalence" => suite_equivalence(k_max.unwrap_or(4), n_max.unwrap_or(8)),
        "braid" => suite_braid(k_max.unwrap_or(4), n_max.unwrap_or(12)),
        "bijection" => suite_bijection(k_max.unwrap_or(4), n_max.unwrap_or(10)),
        "orthogonality" => suite_orthogonality(k_max.unwrap_or(4), n_max.unwrap_or(6)),
        "ncsf" => suite_ncsf(k_max.unwrap_or(4)),
        other => {
            return Err(format!(
                "--suite: unknown suite {other:?}; expected one of tables, equivalence, braid, bijection, orthogonality, ncsf"
            ))
        }
    };
    Ok(Report {
        suite: name.to_string(),
        checks,
    })
}

pub fn print_report(report: &Report, json: bool) -> bool {
    let ok = report.checks.iter().all(|c| c.failures.is_empty());
    if json {
        let checks: Vec<serde_json::Value> = report
            .checks
            .iter()
            .map(|c| {
                serde_json::json!({
                    "name": c.name,
                    "cases": c.cases,
                    "pass": c.failures.is_empty(),
                    "failures": c.failures,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::json!({ "suite": report.suite, "pass": ok, "checks": checks })
        );
    } else {
        for c in &report.checks {
            if c.failures.is_empty() {
                println!("{}: pass ({} cases)", c.name, c.cases);
            } else {
                println!(
                    "{}: FAIL ({} failures out of {} cases)",
                    c.name,
                    c.failures.len(),
                    c.cases
                );
                for f in c.failures.iter().take(5) {
                    println!("  {f}");
                }
            }
        }
        let total: u64 = report.checks.iter().map(|c| c.cases).sum();
        println!(
            "suite {}: {} ({} checks, {} cases)",
            report.suite,
            if ok { "pass" } else { "FAIL" },
            report.checks.len(),
            total
        );
    }
    ok
}

fn suite_tables() -> Vec<Check> {
    let chi_failures: Vec<String> = golden_chi_tables()
        .par_iter()
        .filter_map(|golden| {
            let computed = chi_table(golden.k, golden.n);
            if golden.matches(&computed) {
                None
            } else {
                Some(format!("chi table k={} n={} differs", golden.k, golden.n))
            }
        })
        .collect();
    let tilde_failures: Vec<String> = golden_chi_tilde_tables()
        .par_iter()
        .filter_map(|golden| {
            let computed = chi_tilde_table(golden.k, golden.n);
            if golden.matches(&computed) {
                None
            } else {
                Some(format!("chi~ table k={} n={} differs", golden.k, golden.n))
            }
        })
        .collect();
    vec![
        Check {
            name: "chi tables match published data".into(),
            cases: golden_chi_tables().len() as u64,
            failures: chi_failures,
        },
        Check {
            name: "chi~ tables match published data".into(),
            cases: golden_chi_tilde_tables().len() as u64,
            failures: tilde_failures,
        },
    ]
}

fn mn_instances(k_max: usize, n_max: u32) -> Vec<(usize, usize, Partition)> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        for shape in bounded_partitions_up_to(k as u32, n_max) {
            for r in 1..=k {
                out.push((k, r, shape.clone()));
            }
        }
    }
    out
}

fn suite_equivalence(k_max: usize, n_max: u32) -> Vec<Check> {
    let instances = mn_instances(k_max, n_max);
    let cases = instances.len() as u64;

    let mut agreement: Vec<String> = instances
        .par_iter()
        .filter_map(|(k, r, shape)| {
            let lambda = BoundedPartition::new(shape.clone(), *k);
            let ribbons = mn_ribbons(*r, &lambda);
            let words = mn_words(*r, &lambda);
            let algebra = apply(&ncsf::p(*r, *k), &lambda);
            if ribbons != words || words != algebra {
                Some(format!("k={k} r={r} lambda={shape}: forms disagree"))
            } else {
                None
            }
        })
        .collect();
    agreement.sort();

    let mut bookkeeping: Vec<String> = instances
        .par_iter()
        .flat_map_iter(|(k, r, shape)| {
            let lambda = BoundedPartition::new(shape.clone(), *k);
            let lambda_conj = k_conjugate(&lambda);
            let mut bad = Vec::new();
            let mut seen: Vec<Partition> = Vec::new();
            for (word, mu, asc) in mn_word_pairs(*r, &lambda) {
                if seen.contains(mu.shape()) {
                    bad.push(format!(
                        "k={k} r={r} lambda={shape}: {:?} reached twice",
                        mu.shape()
                    ));
                }
                seen.push(mu.shape().clone());
                let skew = SkewShape::new(mu.shape().clone(), shape.clone()).unwrap();
                if asc as u32 != skew.height() {
                    bad.push(format!(
                        "k={k} r={r} lambda={shape} word={word:?}: asc != height"
                    ));
                }
                let mu_conj = k_conjugate(&mu);
                let conj_skew = SkewShape::new(
                    mu_conj.shape().clone(),
                    lambda_conj.shape().clone(),
                )
                .unwrap();
                if skew.height() + conj_skew.height() != *r as u32 - 1 {
                    bad.push(format!(
                        "k={k} r={r} lambda={shape} word={word:?}: height sum != r-1"
                    ));
                }
            }
            bad
        })
        .collect();
    bookkeeping.sort();

    // Classical reduction at large k, capped by the same size budget.
    let total_cap = n_max.min(9).max(2);
    let mut classical_instances = Vec::new();
    for total in 1..=total_cap {
        for lam_size in 0..total {
            for shape in partitions(lam_size) {
                classical_instances.push((total as usize, (total - lam_size) as usize, shape));
            }
        }
    }
    let classical_cases = classical_instances.len() as u64;
    let mut classical: Vec<String> = classical_instances
        .par_iter()
        .filter_map(|(k, r, shape)| {
            let lambda = BoundedPartition::new(shape.clone(), *k);
            let mn = mn_ribbons(*r, &lambda);
            let mut oracle = KSchurExpansion::zero(*k);
            for (mu, height) in classical_mn(*r, shape) {
                let sign = if height % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                oracle.add_term(mu, sign);
            }
            if mn != oracle {
                Some(format!("k={k} r={r} lambda={shape}: classical reduction fails"))
            } else {
                None
            }
        })
        .collect();
    classical.sort();

    let mut pieri: Vec<String> = instances
        .par_iter()
        .filter_map(|(k, r, shape)| {
            let lambda = BoundedPartition::new(shape.clone(), *k);
            if k_pieri_words(*r, &lambda) != k_pieri_strips(*r, &lambda) {
                Some(format!("k={k} r={r} lambda={shape}: Pieri routes differ"))
            } else {
                None
            }
        })
        .collect();
    pieri.sort();

    vec![
        Check {
            name: "mn_ribbons = mn_words = apply(p_r)".into(),
            cases,
            failures: agreement,
        },
        Check {
            name: "asc = height, height sum = r-1, unique word per term".into(),
            cases,
            failures: bookkeeping,
        },
        Check {
            name: "large-k reduction to classical border strips".into(),
            cases: classical_cases,
            failures: classical,
        },
        Check {
            name: "Pieri strip route = Pieri word route".into(),
            cases,
            failures: pieri,
        },
    ]
}

fn cores_up_to(k: usize, max_size: u32) -> Vec<Core> {
    let mut out = Vec::new();
    for size in 0..=max_size {
        for shape in partitions(size) {
            if is_core(&shape, k + 1) {
                out.push(Core::new(shape, k + 1));
            }
        }
    }
    out
}

fn suite_braid(k_max: usize, core_size_max: u32) -> Vec<Check> {
    let mut instances = Vec::new();
    for k in 1..=k_max {
        for core in cores_up_to(k, core_size_max) {
            instances.push((k, core));
        }
    }
    let cases = instances.len() as u64;
    let mut failures: Vec<String> = instances
        .par_iter()
        .flat_map_iter(|(k, core)| {
            let n = k + 1;
            let act = |word: &[usize]| {
                let mut cur = Some(core.clone());
                for &l in word.iter().rev() {
                    cur = cur.and_then(|c| act_generator(l, &c));
                }
                cur
            };
            let mut bad = Vec::new();
            for i in 0..n {
                if act(&[i, i]).is_some() {
                    bad.push(format!("k={k} core={}: u_{i}^2 != 0", core.shape()));
                }
                if n > 2 {
                    let j = (i + 1) % n;
                    if act(&[i, j, i]) != act(&[j, i, j]) {
                        bad.push(format!("k={k} core={}: braid {i},{j}", core.shape()));
                    }
                }
                for j in 0..n {
                    let dist = (i + n - j) % n;
                    if i != j && dist != 1 && dist != n - 1 && act(&[i, j]) != act(&[j, i]) {
                        bad.push(format!("k={k} core={}: commute {i},{j}", core.shape()));
                    }
                }
            }
            bad
        })
        .collect();
    failures.sort();
    vec![Check {
        name: "core action satisfies the nilCoxeter relations".into(),
        cases,
        failures,
    }]
}

fn suite_bijection(k_max: usize, n_max: u32) -> Vec<Check> {
    let mut bounded_instances = Vec::new();
    for k in 1..=k_max {
        for shape in bounded_partitions_up_to(k as u32, n_max) {
            bounded_instances.push((k, shape));
        }
    }
    let mut round_trip: Vec<String> = bounded_instances
        .par_iter()
        .flat_map_iter(|(k, shape)| {
            let lambda = BoundedPartition::new(shape.clone(), *k);
            let mut bad = Vec::new();
            let core = core_from_bounded(&lambda);
            if bounded_from_core(&core) != lambda {
                bad.push(format!("k={k} lambda={shape}: round trip fails"));
            }
            let conj = k_conjugate(&lambda);
            if conj.size() != lambda.size() {
                bad.push(format!("k={k} lambda={shape}: conjugate changes size"));
            }
            if k_conjugate(&conj) != lambda {
                bad.push(format!("k={k} lambda={shape}: conjugate not involutive"));
            }
            bad
        })
        .collect();
    round_trip.sort();

    let mut core_instances = Vec::new();
    for k in 1..=k_max {
        for core in cores_up_to(k, n_max + 4) {
            core_instances.push((k, core));
        }
    }
    let core_cases = core_instances.len() as u64;
    let mut core_trip: Vec<String> = core_instances
        .par_iter()
        .flat_map_iter(|(k, core)| {
            let mut bad = Vec::new();
            if core_from_bounded(&bounded_from_core(core)) != *core {
                bad.push(format!("k={k} core={}: round trip fails", core.shape()));
            }
            // Surviving generator applications add one box to the bounded
            // image and only cells of the stated residue to the core.
            for i in 0..=*k {
                if let Some(next) = act_generator(i, core) {
                    let before = bounded_from_core(core);
                    let after = bounded_from_core(&next);
                    if after.size() != before.size() + 1 {
                        bad.push(format!(
                            "k={k} core={}: u_{i} adds {} boxes",
                            core.shape(),
                            after.size() as i64 - before.size() as i64
                        ));
                    }
                    for (row, col) in next.shape().cells() {
                        if !core.shape().contains_cell(row, col)
                            && kschur_core::cores::residue(row, col, k + 1) != i
                        {
                            bad.push(format!(
                                "k={k} core={}: u_{i} adds wrong residue",
                                core.shape()
                            ));
                        }
                    }
                }
            }
            bad
        })
        .collect();
    core_trip.sort();

    vec![
        Check {
            name: "bounded -> core -> bounded, conjugate involution".into(),
            cases: bounded_instances.len() as u64,
            failures: round_trip,
        },
        Check {
            name: "core -> bounded -> core, generator box/residue bookkeeping".into(),
            cases: core_cases,
            failures: core_trip,
        },
    ]
}

fn suite_orthogonality(k_max: usize, n_max: u32) -> Vec<Check> {
    let instances: Vec<(usize, u32)> = (1..=k_max)
        .flat_map(|k| (1..=n_max).map(move |n| (k, n)))
        .collect();
    let cases = instances.len() as u64;
    let mut failures: Vec<String> = instances
        .par_iter()
        .filter_map(|(k, n)| {
            orthogonality_failure(*k, *n).map(|(nu, mu, got)| {
                format!("k={k} n={n}: sum over chi*chi~ at nu={nu}, mu={mu} gives {got}")
            })
        })
        .collect();
    failures.sort();
    vec![Check {
        name: "sum_lambda chi(lambda,nu) chi~(lambda,mu) = z_nu delta".into(),
        cases,
        failures,
    }]
}

fn suite_ncsf(k_max: usize) -> Vec<Check> {
    let ks: Vec<usize> = (1..=k_max).collect();
    let mut algebra_failures: Vec<String> = ks
        .par_iter()
        .flat_map_iter(|&k| {
            let mut bad = Vec::new();
            for r in 1..=k {
                for s in 1..=k {
                    if &ncsf::h(r, k) * &ncsf::h(s, k) != &ncsf::h(s, k) * &ncsf::h(r, k) {
                        bad.push(format!("k={k}: h_{r} h_{s} do not commute"));
                    }
                }
                let mut acc = ncsf::AlgebraElement::zero(k);
                let mut sign = BigInt::one();
                for i in 0..=r {
                    acc = &acc + &(&ncsf::e(r - i, k) * &ncsf::h(i, k)).scaled(&sign);
                    sign = -sign;
                }
                if !acc.is_zero() {
                    bad.push(format!("k={k}: e/h duality fails at r={r}"));
                }
                for i in 0..r {
                    if ncsf::hook_schur_alternating(r, i, k) != ncsf::hook_schur_from_words(r, i, k)
                    {
                        bad.push(format!("k={k}: hook Schur routes differ at r={r}, i={i}"));
                    }
                }
                if ncsf::p_alternating(r, k) != ncsf::p_from_words(r, k, true)
                    || ncsf::p_from_words(r, k, false) != ncsf::p_from_words(r, k, true)
                {
                    bad.push(format!("k={k}: power sum routes differ at r={r}"));
                }
                for i in 0..=r {
                    let lhs = &ncsf::h(r - i, k) * &ncsf::e(i, k);
                    let mut rhs = ncsf::AlgebraElement::zero(k);
                    for (word, asc) in enumerate_hook_words(k, r, false) {
                        if asc == i || asc + 1 == i {
                            rhs.add_term(element_from_word(&word, k).unwrap(), BigInt::one());
                        }
                    }
                    if lhs != rhs {
                        bad.push(format!("k={k}: h e hook-word sum fails at r={r}, i={i}"));
                    }
                }
            }
            bad
        })
        .collect();
    algebra_failures.sort();

    let mut hook_failures: Vec<String> = ks
        .par_iter()
        .flat_map_iter(|&k| {
            let mut bad = Vec::new();
            let mut cases = 0u64;
            for u in elements_up_to_length(k, 6) {
                if u.is_identity() || u.support().len() > k || !is_k_connected(&u) {
                    continue;
                }
                cases += 1;
                let hooks: Vec<_> = u
                    .reduced_words()
                    .into_iter()
                    .filter(|w| hook_word_ascents(w, k).is_some())
                    .collect();
                if hooks.len() > 1 {
                    bad.push(format!("k={k}: element with two hook words {hooks:?}"));
                }
                match (hook_factorize(&u), hooks.first()) {
                    (Some((w, _)), Some(expected)) if &w == expected => {}
                    (None, None) => {}
                    _ => bad.push(format!("k={k}: hook_factorize disagrees with scan")),
                }
            }
            let _ = cases;
            bad
        })
        .collect();
    hook_failures.sort();

    let hook_cases: u64 = ks
        .iter()
        .map(|&k| {
            elements_up_to_length(k, 6)
                .into_iter()
                .filter(|u| {
                    !u.is_identity() && u.support().len() <= k && is_k_connected(u)
                })
                .count() as u64
        })
        .sum();

    vec![
        Check {
            name: "commutativity, duality, route agreement, hook-word sums".into(),
            cases: ks.iter().map(|&k| (k * k) as u64).sum(),
            failures: algebra_failures,
        },
        Check {
            name: "hook-word uniqueness for k-connected elements (len <= 6)".into(),
            cases: hook_cases,
            failures: hook_failures,
        },
    ]
}

// Pieri route agreement rides along with the bijection suite's scope but has
// its own check so `verify --suite bijection` stays focused; it is exercised
// in the equivalence suite through the word form instead.
#[allow(dead_code)]
fn pieri_agreement(k_max: usize, n_max: u32) -> Vec<String> {
    let mut bad = Vec::new();
    for k in 1..=k_max {
        for shape in bounded_partitions_up_to(k as u32, n_max) {
            let lambda = BoundedPartition::new(shape.clone(), k);
            for r in 1..=k {
                if k_pieri_words(r, &lambda) != k_pieri_strips(r, &lambda) {
                    bad.push(format!("k={k} r={r} lambda={shape}: Pieri routes differ"));
                }
            }
        }
    }
    bad
}
