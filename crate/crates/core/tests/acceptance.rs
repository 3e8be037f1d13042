//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! Run with `cargo test -p hodge-core --test acceptance -- --nocapture` to see the lines.

use hodge_core::flips::{c_n_even_closed, c_n_even_strata, chi_fiber_checks};
use hodge_core::moduli::{
    e_m3, e_m3_via_pipeline, e_n31_closed_chamber, e_n31_flipsum_chamber, poincare,
    poincare_m3_display,
};
use hodge_core::rank2::{e_m2_odd, e_triples21, e_triples21_chamber, e_triples21_critical_stable};
use hodge_core::xseries::{residue_by_series, residue_f1, residue_f2};
use hodge_core::zoo::{
    e_grassmannian, e_projective, e_sym, e_sym2_quotient, jacobian_poly, projective_poly, sym_poly,
};
use hodge_core::{FractionUV, LaurentPoly, TripleType};
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(criterion: u32, title: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("PASS criterion {criterion}: {title}");
    } else {
        println!("FAIL criterion {criterion}: {title}");
        for f in failures.iter().take(20) {
            println!("    {f}");
        }
    }
    assert!(
        failures.is_empty(),
        "criterion {criterion} failed: {failures:?}"
    );
}

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

/// `g ∈ {2,3}, d1 ∈ {4..9}, d2 ∈ {0,1}` with `d1 - 3 d2 > 0`.
fn rank31_grid() -> Vec<TripleType> {
    let mut out = Vec::new();
    for g in 2..=3 {
        for d1 in 4..=9 {
            for d2 in 0..=1 {
                if d1 - 3 * d2 > 0 {
                    out.push(TripleType::rank31(g, d1, d2).unwrap());
                }
            }
        }
    }
    out
}

#[test]
fn criterion_1_closed_form_equals_flip_sum() {
    let mut failures = Vec::new();
    let mut chambers = 0;
    for t in rank31_grid() {
        for k in 1..=t.chambers().len() {
            chambers += 1;
            let closed = e_n31_closed_chamber(&t, k).unwrap();
            let flips = e_n31_flipsum_chamber(&t, k).unwrap();
            if closed.poly != flips.poly {
                failures.push(format!("g={} {t} chamber {k}", t.g));
            }
        }
    }
    assert!(chambers > 0);
    report(
        1,
        &format!("closed form = flip sum on {chambers} chambers"),
        &failures,
    );
}

#[test]
fn criterion_2_m3_routes_and_invariants() {
    let mut failures = Vec::new();
    for g in 2..=4u32 {
        let closed = e_m3(g).unwrap();
        let pipeline = e_m3_via_pipeline(g).unwrap();
        let d = 9 * g as i64 - 8;
        let e = &closed.poly;
        if *e != pipeline.poly {
            failures.push(format!("g={g}: closed display != pipeline"));
        }
        if e.total_degree() != Some(2 * d) {
            failures.push(format!("g={g}: degree {:?}", e.total_degree()));
        }
        if !e.is_symmetric() {
            failures.push(format!("g={g}: not symmetric"));
        }
        if !e.has_nonnegative_coefficients() {
            failures.push(format!("g={g}: negative coefficient"));
        }
        if !e.is_dual(d) {
            failures.push(format!("g={g}: duality fails for D={d}"));
        }
        if poincare(&closed).coeffs != poincare_m3_display(g).unwrap() {
            failures.push(format!("g={g}: diagonal != Poincaré display"));
        }
    }
    report(
        2,
        "M(3,d) closed = pipeline, degree, symmetry, positivity, duality, Poincaré",
        &failures,
    );
}

#[test]
fn criterion_3_strata_sum_equals_closed_c_n() {
    let mut failures = Vec::new();
    let mut count = 0;
    for t in rank31_grid() {
        for (n, _) in t.criticals_31() {
            if n % 2 != 0 {
                continue;
            }
            count += 1;
            let closed = c_n_even_closed(&t, n).unwrap();
            let sum: LaurentPoly = c_n_even_strata(&t, n).unwrap().into_iter().sum();
            if closed != FractionUV::from_poly(sum) {
                failures.push(format!("g={} {t} n={n}", t.g));
            }
        }
    }
    assert!(count > 0);
    report(
        3,
        &format!("six strata reproduce C_n at {count} even criticals"),
        &failures,
    );
}

#[test]
fn criterion_4_chi_fibre_ranks() {
    let mut failures = Vec::new();
    let mut count = 0;
    for t in rank31_grid() {
        let g = t.g;
        for (n, _) in t.criticals_31() {
            let n1 = t.d1 - t.d2 - n;
            let two_n2 = 2 * (g - 1 - t.d1) + 3 * n;
            let mut expected = vec![2 * n1, two_n2];
            if n % 2 == 0 {
                let n2 = two_n2 / 2;
                expected.extend([g - 1 + n1, g - 1 + n2, n1, n2, g - 1, g]);
            }
            let checks = chi_fiber_checks(&t, n).unwrap();
            let values: Vec<i64> = checks.iter().map(|c| c.value).collect();
            count += checks.len();
            if values != expected {
                failures.push(format!("g={g} {t} n={n}: {values:?} != {expected:?}"));
            }
        }
    }
    report(
        4,
        &format!("{count} chi identities for the flip-locus fibres"),
        &failures,
    );
}

#[test]
fn criterion_5_residues_match_series() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut failures = Vec::new();
    let mut negative_seen = false;
    for case in 0..50 {
        let g = rng.gen_range(2..=3u32);
        let mut pts: Vec<LaurentPoly> = Vec::new();
        while pts.len() < 4 {
            let (a, b) = (rng.gen_range(-3..=3i64), rng.gen_range(-3..=3i64));
            let m = LaurentPoly::term(1, a, b);
            if !pts.contains(&m) {
                negative_seen |= a < 0 || b < 0;
                pts.push(m);
            }
        }
        let f1 = residue_f1(g, &pts[0], &pts[1], &pts[2]).unwrap();
        if f1 != residue_by_series(g, &pts[..3]).unwrap() {
            failures.push(format!("case {case}: F1 at g={g}, {pts:?}"));
        }
        let f2 = residue_f2(g, &pts[0], &pts[1], &pts[2], &pts[3]).unwrap();
        if f2 != residue_by_series(g, &pts).unwrap() {
            failures.push(format!("case {case}: F2 at g={g}, {pts:?}"));
        }
    }
    assert!(negative_seen);
    report(
        5,
        "F1 and F2 equal series extraction on 50 random instances",
        &failures,
    );
}

#[test]
fn criterion_6_building_blocks() {
    let mut failures = Vec::new();
    let sym2 = p("1 + 2*u + 2*v + u^2 + 5*u*v + v^2 + 2*u^2*v + 2*u*v^2 + u^2*v^2");
    if e_sym(2, 2).poly != sym2 {
        failures.push(format!("Sym^2 X, g=2: {}", e_sym(2, 2).poly));
    }
    let gr24 = p("1 + u*v + 2*u^2*v^2 + u^3*v^3 + u^4*v^4");
    if e_grassmannian(2, 4).poly != gr24 {
        failures.push(format!("Gr(2,4): {}", e_grassmannian(2, 4).poly));
    }
    if e_sym2_quotient(&e_projective(2)).unwrap().poly != e_projective(3).poly {
        failures.push("(P^1 x P^1)/Z_2 != P^2".into());
    }
    report(6, "Sym^2 X, Gr(2,4) and (P^1 x P^1)/Z_2", &failures);
}

#[test]
fn criterion_7_rank2_duality() {
    let mut failures = Vec::new();
    for g in 2..=4u32 {
        let m = e_m2_odd(g).unwrap();
        let d = 4 * g as i64 - 3;
        if !(m.poly.is_symmetric() && m.poly.has_nonnegative_coefficients() && m.poly.is_dual(d)) {
            failures.push(format!("M(2,odd) g={g}"));
        }
    }
    for d1 in 3..=6 {
        let t = TripleType::rank21(2, d1, 0).unwrap();
        let d = 3 * 2 - 2 + d1;
        for k in 1..=t.chambers().len() {
            let e = e_triples21_chamber(&t, k).unwrap();
            if e.is_empty() || !e.poly.is_dual(d) {
                failures.push(format!("{t} chamber {k}"));
            }
        }
    }
    report(
        7,
        "rank-2 duality for M(2,odd) and (2,1) triples",
        &failures,
    );
}

#[test]
fn criterion_8_critical_stable_locus() {
    let mut failures = Vec::new();
    let g = 2u32;
    let jac = jacobian_poly(g);
    for d1 in 3..=6 {
        let t = TripleType::rank21(2, d1, 0).unwrap();
        let chambers = t.chambers();
        for (i, (dm, _)) in t.criticals_21().into_iter().enumerate() {
            let (lo, hi) = chambers[i];
            let below = e_triples21(&t, (lo + hi) / Rational64::from_integer(2)).unwrap();
            let k = d1 - dm;
            let flip_below =
                &(&(&jac * &jac) * &sym_poly(k, g)) * &projective_poly(2 * dm - d1 + g as i64 - 1);
            let stable = e_triples21_critical_stable(&t, dm).unwrap();
            if &below.poly - &flip_below != stable.poly {
                failures.push(format!("{t} d_M={dm}"));
            }
        }
    }
    report(
        8,
        "e(N below σ_c) - e(S-) = e(stable locus at σ_c)",
        &failures,
    );
}
