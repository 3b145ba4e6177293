//! Acceptance criteria. Each prints one PASS/FAIL line; run with
//! `cargo test -p aqecc --test acceptance -- --nocapture` to see them.

use std::collections::BTreeSet;

use aqecc::fixtures::{self, TableId};
use aqecc::reproduce::{Reproducer, RowReport, Status};
use aqecc_core::aqecc::{
    from_nested_cyclic, from_self_orthogonal_linear, AqeccParams, SingletonStatus,
};
use aqecc_core::codes::{AdditiveCode, LinearCode, SelfDualType};
use aqecc_core::constructions::{cyclic_code, dodecacode, macdonald_code, repetition_code};
use aqecc_core::spectrum::{
    dual_distance, griesmer_check, macwilliams_transform, oa_strength, spectra, weight_enumerator,
    BoundStatus, Budget,
};
use aqecc_core::{F4Poly, F4Vec, F4};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// pinned thresholds; distances and dimensions are compared with zero tolerance
const CYCLIC_MIN_EXACT: usize = 50;
const CYCLIC_ROWS: std::ops::RangeInclusive<usize> = 1..=55;
const BCH_MAX_SMALL_SIDE: usize = 10;
const BCH_MIN_EXACT: usize = 20;
const CIRCULANT_ROWS: std::ops::RangeInclusive<usize> = 1..=17;
const FOURCIRC_MAX_N: usize = 25;
const SUITE_MACWILLIAMS: usize = 200;
const SUITE_OA_CODES: usize = 100;
const SUITE_OA_COSETS: usize = 3;
const SUITE_DUAL_CLOSURE: usize = 500;
const SUITE_LINEAR: usize = 100;

/// Criteria that fail on the shipped fixtures, with the reason.
const KNOWN_FAILING: &[(u8, &str)] = &[(
    4,
    "circulant rows 11-13 (n=20): the printed vector yields dx = 3, 3, 1 instead of 5, 4, 3",
)];

struct Outcome {
    id: u8,
    pass: bool,
    detail: String,
}

fn outcome(id: u8, pass: bool, detail: impl Into<String>) -> Outcome {
    let o = Outcome {
        id,
        pass,
        detail: detail.into(),
    };
    println!(
        "criterion {}: {} {}",
        o.id,
        if o.pass { "PASS" } else { "FAIL" },
        o.detail
    );
    o
}

fn budget() -> Budget {
    Budget::default()
}

fn run(table: TableId) -> Vec<RowReport> {
    Reproducer::new(budget())
        .run(table, None, 1)
        .expect("fixtures load")
}

fn row_no(r: &RowReport) -> usize {
    r.row.parse().expect("numeric row")
}

fn failing(reports: &[&RowReport]) -> String {
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| format!("{}:{}", r.row, r.status))
        .collect();
    if bad.is_empty() {
        String::new()
    } else {
        format!("; not passing: {}", bad.join(" "))
    }
}

fn cyclic_rows() -> Outcome {
    let reports = run(TableId::Cyclic);
    let window: Vec<&RowReport> = reports
        .iter()
        .filter(|r| CYCLIC_ROWS.contains(&row_no(r)))
        .collect();
    let exact = window.iter().filter(|r| r.status == Status::Pass).count();
    let considered = window
        .iter()
        .filter(|r| r.status != Status::Flagged)
        .count();
    outcome(
        1,
        exact >= CYCLIC_MIN_EXACT,
        format!(
            "{exact}/{considered} rows with n <= 21 match exactly (need >= {CYCLIC_MIN_EXACT}){}",
            failing(&window)
        ),
    )
}

fn bch_rows() -> Outcome {
    let rows = fixtures::bch_rows().unwrap();
    let reports = run(TableId::Bch);
    let small: BTreeSet<usize> = rows
        .iter()
        .filter(|r| r.code.k.min(r.n - r.code.k) <= BCH_MAX_SMALL_SIDE)
        .map(|r| r.row)
        .collect();
    let chosen: Vec<&RowReport> = reports
        .iter()
        .filter(|r| small.contains(&row_no(r)))
        .collect();
    let exact = chosen.iter().filter(|r| r.status == Status::Pass).count();
    let passed = |n: usize, k: usize, d: usize, dual: Option<usize>| {
        rows.iter().any(|r| {
            r.n == n
                && r.code.k == k
                && r.code.d == d
                && dual.is_none_or(|x| x == r.dual_d)
                && reports
                    .iter()
                    .any(|p| row_no(p) == r.row && p.status == Status::Pass)
        })
    };
    let n27 = rows.iter().filter(|r| r.n == 27).all(|r| {
        chosen
            .iter()
            .any(|p| row_no(p) == r.row && p.status == Status::Pass)
    });
    let named = passed(31, 26, 3, None)
        && passed(31, 21, 5, None)
        && passed(31, 6, 15, None)
        && passed(51, 47, 2, Some(36))
        && passed(51, 43, 3, Some(24));
    // quantum rows whose two codes both lie in the small-side range
    let q_rows = fixtures::bch_qecc_rows().unwrap();
    let q_reports = run(TableId::BchQecc);
    let derived: Vec<&RowReport> = q_rows
        .iter()
        .filter(|r| {
            r.inner.k.min(r.n - r.inner.k) <= BCH_MAX_SMALL_SIDE
                && r.outer.k.min(r.n - r.outer.k) <= BCH_MAX_SMALL_SIDE
        })
        .map(|r| q_reports.iter().find(|p| row_no(p) == r.row).unwrap())
        .collect();
    let derived_ok = derived.iter().all(|r| r.status == Status::Pass);
    outcome(
        2,
        exact == chosen.len() && exact >= BCH_MIN_EXACT && n27 && named && !derived.is_empty() && derived_ok,
        format!(
            "{exact}/{} BCH rows with min(k,n-k) <= {BCH_MAX_SMALL_SIDE} exact (need all, >= {BCH_MIN_EXACT}); n=27 {n27}; named codes {named}; {}/{} derived quantum rows exact{}{}",
            chosen.len(),
            derived.iter().filter(|r| r.status == Status::Pass).count(),
            derived.len(),
            failing(&chosen),
            failing(&derived),
        ),
    )
}

/// Minimum nonzero weight by summing every F2-combination of the basis.
fn brute_min_weight(c: &AdditiveCode) -> Option<usize> {
    elements(c)
        .iter()
        .map(F4Vec::weight)
        .filter(|&w| w > 0)
        .min()
}

fn elements(c: &AdditiveCode) -> Vec<F4Vec> {
    let basis = c.basis();
    let mut out = vec![F4Vec::zeros(c.n())];
    for b in basis {
        let more: Vec<F4Vec> = out.iter().map(|x| x.sum(b)).collect();
        out.extend(more);
    }
    out
}

fn dodecacode_suite() -> Outcome {
    let c = dodecacode();
    let b = budget();
    let self_dual = c.is_self_dual();
    let type_ii = c.classify_type() == Ok(SelfDualType::TypeII);
    let d = spectra(&c, &b).unwrap().primal.min_weight();
    let oracle = brute_min_weight(&c);
    let reports = run(TableId::Examples);
    let get = |id: &str| reports.iter().find(|r| r.row == id).unwrap();
    let (rd, re) = (get("dodecacode-d"), get("dodecacode-e"));
    let pairs = rd.status == Status::Pass
        && re.status == Status::Pass
        && rd.computed == "[[12,2,6/3]]"
        && re.computed == "[[12,4,6/2]]";
    outcome(
        3,
        self_dual && type_ii && d == Some(6) && oracle == Some(6) && pairs,
        format!(
            "self-dual {self_dual}, type II {type_ii}, d {d:?} (brute force {oracle:?}), pairs {} and {}",
            rd.computed, re.computed
        ),
    )
}

fn circulant_family() -> Outcome {
    let circ = run(TableId::Circulant);
    let window: Vec<&RowReport> = circ
        .iter()
        .filter(|r| CIRCULANT_ROWS.contains(&row_no(r)))
        .collect();
    let circ_ok = window.iter().filter(|r| r.status == Status::Pass).count();
    let mut four: Vec<RowReport> = Vec::new();
    for t in [TableId::Fourcirc, TableId::Bordered] {
        let keep: BTreeSet<usize> = fixtures::deletion_rows(t)
            .unwrap()
            .iter()
            .filter(|r| r.n <= FOURCIRC_MAX_N)
            .map(|r| r.row)
            .collect();
        four.extend(run(t).into_iter().filter(|r| keep.contains(&row_no(r))));
    }
    let four_refs: Vec<&RowReport> = four.iter().collect();
    let four_ok = four.iter().filter(|r| r.status == Status::Pass).count();
    let half = window
        .iter()
        .any(|r| r.status == Status::Pass && r.computed.contains(".5,"));
    outcome(
        4,
        circ_ok == window.len() && four_ok == four.len() && !four.is_empty() && half,
        format!(
            "circulant {circ_ok}/{} rows with n <= 22{}; four-circulant and bordered {four_ok}/{} rows with n <= {FOURCIRC_MAX_N}{}",
            window.len(),
            failing(&window),
            four.len(),
            failing(&four_refs),
        ),
    )
}

fn macdonald_suite() -> Outcome {
    let b = budget();
    let mut notes = Vec::new();
    let mut ok = true;
    // two-weight counts: 4^k - 4^(k-u) words of weight 4^(k-1) - 4^(u-1), 4^(k-u) - 1 of weight 4^(k-1)
    for k in 2..=4usize {
        for u in 1..k {
            let c = macdonald_code(k, u).unwrap();
            let n = (4usize.pow(k as u32) - 4usize.pow(u as u32)) / 3;
            let (w1, w2) = (
                4usize.pow(k as u32 - 1) - 4usize.pow(u as u32 - 1),
                4usize.pow(k as u32 - 1),
            );
            let mut want = vec![BigUint::from(0u32); n + 1];
            want[0] = 1u32.into();
            want[w1] = BigUint::from(4usize.pow(k as u32) - 4usize.pow((k - u) as u32));
            want[w2] += BigUint::from(4usize.pow((k - u) as u32) - 1);
            let w = weight_enumerator(&c.additive_view(), &b).unwrap();
            let grie = griesmer_check(n, k, w1).status == BoundStatus::Meets;
            if c.n() != n || w.coeffs() != want.as_slice() || !grie {
                ok = false;
                notes.push(format!("C({k},{u}) mismatch"));
            }
        }
    }
    // printed spectra and the quantum codes
    type Printed = (usize, usize, usize, &'static [(usize, u32)], &'static str);
    let printed: [Printed; 3] = [
        (3, 2, 16, &[(0, 1), (12, 60), (16, 3)], "[[16,10,3/3]]"),
        (4, 3, 64, &[(0, 1), (48, 252), (64, 3)], "[[64,56,3/3]]"),
        (4, 2, 80, &[(0, 1), (60, 240), (64, 15)], "[[80,72,3/3]]"),
    ];
    for (k, u, n, spec, q) in printed {
        let c = macdonald_code(k, u).unwrap();
        let w = weight_enumerator(&c.additive_view(), &b).unwrap();
        let support: Vec<(usize, BigUint)> =
            spec.iter().map(|&(i, a)| (i, BigUint::from(a))).collect();
        let got = from_self_orthogonal_linear(&c, &b)
            .map(|p| p.to_string())
            .unwrap_or_default();
        if c.n() != n || w.support() != support || got != q {
            ok = false;
        }
        notes.push(format!("C({k},{u}) -> {got}"));
    }
    outcome(5, ok, notes.join(", "))
}

fn repetition_suite() -> Outcome {
    let b = budget();
    let mut bad = Vec::new();
    for n in (2..=30).step_by(2) {
        let p = from_self_orthogonal_linear(&repetition_code(n), &b).unwrap();
        if (p.n, p.log2_k, p.dz, p.dx) != (n, 2 * (n - 2), 2, 2) {
            bad.push(p.to_string());
        }
    }
    for n in (3..=29).step_by(2) {
        let g = repetition_generator(n);
        let c = cyclic_code(n, &g).unwrap();
        let p = from_nested_cyclic(&c, &c, &b).unwrap();
        if (p.n, p.log2_k, p.dz, p.dx) != (n, 0, n, 2) {
            bad.push(p.to_string());
        }
    }
    outcome(
        6,
        bad.is_empty(),
        format!(
            "even n <= 30 give [[n,n-2,2/2]], odd n <= 29 give [[n,0,n/2]]; mismatches: {bad:?}"
        ),
    )
}

/// `1 + x + ... + x^(n-1)`.
fn repetition_generator(n: usize) -> F4Poly {
    vec!["1"; n].join(" ").parse().unwrap()
}

fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> F4Vec {
    F4Vec::from_symbols(
        &(0..n)
            .map(|_| F4::from_index(rng.gen_range(0..4)))
            .collect::<Vec<_>>(),
    )
}

fn random_code(rng: &mut ChaCha8Rng, n: usize) -> AdditiveCode {
    let rows = rng.gen_range(0..=2 * n);
    AdditiveCode::from_generators(n, (0..rows).map(|_| random_vec(rng, n)).collect()).unwrap()
}

/// Symplectic bits of a symbol: 1 = (1,0), w = (0,1), W = (1,1).
fn bits(x: F4) -> (u8, u8) {
    match x.to_string().as_str() {
        "0" => (0, 0),
        "1" => (1, 0),
        "w" => (0, 1),
        _ => (1, 1),
    }
}

/// Trace-Hermitian form as the symplectic form on bit pairs.
fn trace_form(u: &F4Vec, v: &F4Vec) -> u8 {
    u.symbols().zip(v.symbols()).fold(0, |acc, (x, y)| {
        let ((a, b), (c, d)) = (bits(x), bits(y));
        acc ^ (a & d) ^ (b & c)
    })
}

/// Largest `t` such that every `t` columns show all `4^t` tuples equally often.
fn brute_oa_strength(words: &[F4Vec], n: usize) -> usize {
    let mut strength = 0;
    for t in 1..=n {
        let mut uniform = true;
        for cols in combinations(n, t) {
            let mut counts = vec![0usize; 1 << (2 * t)];
            for w in words {
                let key = cols.iter().fold(0usize, |k, &i| {
                    let (a, b) = bits(w.get(i));
                    k << 2 | (a as usize) << 1 | b as usize
                });
                counts[key] += 1;
            }
            if counts.iter().any(|&c| c != counts[0]) {
                uniform = false;
                break;
            }
        }
        if !uniform {
            break;
        }
        strength = t;
    }
    strength
}

fn combinations(n: usize, t: usize) -> Vec<Vec<usize>> {
    if t == 0 {
        return vec![vec![]];
    }
    (t - 1..n)
        .flat_map(|last| {
            combinations(last, t - 1).into_iter().map(move |mut c| {
                c.push(last);
                c
            })
        })
        .collect()
}

fn same_code(a: &AdditiveCode, b: &AdditiveCode) -> bool {
    a.dimension() == b.dimension() && a.is_subcode_of(b).unwrap() && b.is_subcode_of(a).unwrap()
}

fn property_suites() -> Outcome {
    let b = budget();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4f4);
    let mut fails = [0usize; 4];

    for _ in 0..SUITE_MACWILLIAMS {
        let n = rng.gen_range(1..=10);
        let c = random_code(&mut rng, n);
        let w = weight_enumerator(&c, &b).unwrap();
        let wd = weight_enumerator(&c.trace_dual(), &b).unwrap();
        let mut counts = vec![BigUint::from(0u32); n + 1];
        if c.dimension() <= 16 {
            for x in elements(&c) {
                counts[x.weight()] += 1u32;
            }
        } else {
            counts = w.coeffs().to_vec();
        }
        let round = macwilliams_transform(&macwilliams_transform(&w).unwrap()).unwrap();
        if macwilliams_transform(&w).unwrap() != wd || round != w || w.coeffs() != counts.as_slice()
        {
            fails[0] += 1;
        }
    }

    let mut drawn = 0;
    while drawn < SUITE_OA_CODES {
        let n = rng.gen_range(1..=8);
        let c = random_code(&mut rng, n);
        drawn += 1;
        let dd = dual_distance(&c, &b).unwrap_or(n + 1);
        let words = elements(&c);
        let oracle = brute_oa_strength(&words, n);
        let mut ok = oa_strength(&c, None, &b) == Ok(dd - 1) && oracle == dd - 1;
        for _ in 0..SUITE_OA_COSETS {
            let rep = random_vec(&mut rng, n);
            let coset: Vec<F4Vec> = words.iter().map(|w| w.sum(&rep)).collect();
            ok &= oa_strength(&c, Some(&rep), &b) == Ok(dd - 1)
                && brute_oa_strength(&coset, n) == dd - 1;
        }
        if !ok {
            fails[1] += 1;
        }
    }

    for _ in 0..SUITE_DUAL_CLOSURE {
        let n = rng.gen_range(1..=12);
        let c = random_code(&mut rng, n);
        let d = c.trace_dual();
        let orthogonal = c
            .basis()
            .iter()
            .all(|x| d.basis().iter().all(|y| trace_form(x, y) == 0));
        if !(orthogonal && c.dimension() + d.dimension() == 2 * n && same_code(&d.trace_dual(), &c))
        {
            fails[2] += 1;
        }
    }

    for _ in 0..SUITE_LINEAR {
        let n = rng.gen_range(1..=10);
        let rows = rng.gen_range(0..=n);
        let lin =
            LinearCode::from_generators(n, (0..rows).map(|_| random_vec(&mut rng, n)).collect())
                .unwrap();
        let herm = lin.hermitian_dual().unwrap().additive_view();
        let tr = lin.additive_view().trace_dual();
        if !(same_code(&herm, &tr) && herm.dimension() == 2 * (n - lin.k())) {
            fails[3] += 1;
        }
    }

    outcome(
        7,
        fails.iter().all(|&f| f == 0),
        format!(
            "failures: MacWilliams {}/{SUITE_MACWILLIAMS}, OA {}/{SUITE_OA_CODES} (with {SUITE_OA_COSETS} cosets each), dual closure {}/{SUITE_DUAL_CLOSURE}, linear duals {}/{SUITE_LINEAR}",
            fails[0], fails[1], fails[2], fails[3]
        ),
    )
}

fn singleton_bold() -> Outcome {
    let cyc = run(TableId::Cyclic);
    let rows = fixtures::cyclic_rows().unwrap();
    let b = budget();
    let bold = [
        "[[3,1,2/2]]",
        "[[5,2,3/2]]",
        "[[9,7,2/2]]",
        "[[15,13,2/2]]",
        "[[21,19,2/2]]",
    ];
    let mut seen = Vec::new();
    let mut ok = true;
    for r in rows.iter().filter(|r| r.bold) {
        let rep = cyc.iter().find(|p| row_no(p) == r.row).unwrap();
        let c = cyclic_code(r.c.n, &aqecc::io::parse_poly(&r.gen_c).unwrap()).unwrap();
        let d = cyclic_code(r.d.n, &aqecc::io::parse_poly(&r.gen_d).unwrap()).unwrap();
        let p: AqeccParams = from_nested_cyclic(&c, &d, &b).unwrap();
        ok &= rep.status == Status::Pass && p.singleton == SingletonStatus::Meets;
        seen.push(p.to_string());
    }
    ok &= seen == bold;
    let ext = run(TableId::Selfdual);
    let two = ext.iter().find(|r| r.row == "2-II").map(|r| r.status);
    ok &= two == Some(Status::SkippedExternal);
    outcome(
        8,
        ok,
        format!("meets for {}; [[2,0,2/2]] {:?}", seen.join(" "), two),
    )
}

#[test]
fn acceptance() {
    let outcomes = [
        cyclic_rows(),
        bch_rows(),
        dodecacode_suite(),
        circulant_family(),
        macdonald_suite(),
        repetition_suite(),
        property_suites(),
        singleton_bold(),
    ];
    let unexpected: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.pass && !KNOWN_FAILING.iter().any(|(id, _)| *id == o.id))
        .map(|o| format!("criterion {}: {}", o.id, o.detail))
        .collect();
    for (id, why) in KNOWN_FAILING {
        if outcomes.iter().any(|o| o.id == *id && !o.pass) {
            println!("criterion {id} is a known failure: {why}");
        }
    }
    assert!(unexpected.is_empty(), "{unexpected:#?}");
}
