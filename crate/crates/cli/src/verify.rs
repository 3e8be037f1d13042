use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, ValueEnum};
use hodge_core::flips::{c_n, c_n_odd, c_n_odd_structural, chi_fiber_checks};
use hodge_core::moduli::{
    e_m3, e_m3_via_pipeline, e_n31_closed, e_n31_flipsum, poincare, poincare_m3_display,
    poincare_n31_display,
};
use hodge_core::rank2::{
    e_m2_odd, e_triples21, e_triples21_critical_stable, flip_locus21_above, flip_locus21_below,
};
use hodge_core::zoo::{e_grassmannian, e_projective, e_sym, e_sym2_quotient, HodgeResult};
use hodge_core::{FractionUV, LaurentPoly, TripleType};
use num_bigint::BigInt;
use num_rational::Rational64;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Algebra,
    Zoo,
    Rank2,
    Flips,
    Crosspath,
    M3,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GridPreset {
    Quick,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, value_enum, default_value = "quick")]
    pub grid: GridPreset,
    #[arg(long, value_enum, default_value = "text")]
    pub output: ReportFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub grid: String,
    pub cases: Vec<CaseResult>,
    pub wall_time_ms: u128,
}

impl VerifyReport {
    fn count(&self, status: Status) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }
}

struct Grid {
    genera: Vec<i64>,
    d1: Vec<i64>,
    d2: Vec<i64>,
    rank2_genera: Vec<u32>,
    m3_genera: Vec<u32>,
}

impl Grid {
    fn new(preset: GridPreset) -> Self {
        match preset {
            GridPreset::Quick => Grid {
                genera: vec![2],
                d1: (4..=7).collect(),
                d2: vec![0],
                rank2_genera: vec![2, 3],
                m3_genera: vec![2, 3],
            },
            GridPreset::Full => Grid {
                genera: vec![2, 3],
                d1: (4..=9).collect(),
                d2: vec![0, 1],
                rank2_genera: vec![2, 3, 4],
                m3_genera: vec![2, 3, 4],
            },
        }
    }

    fn rank31(&self) -> Vec<TripleType> {
        let mut out = Vec::new();
        for &g in &self.genera {
            for &d1 in &self.d1 {
                for &d2 in &self.d2 {
                    if d1 - 3 * d2 > 0 {
                        out.push(TripleType::rank31(g, d1, d2).unwrap());
                    }
                }
            }
        }
        out
    }

    fn rank21(&self) -> Vec<TripleType> {
        let mut out = Vec::new();
        for &g in &self.genera {
            for d1 in 3..=*self.d1.iter().max().unwrap() - 1 {
                for &d2 in &self.d2 {
                    if d1 - 2 * d2 > 0 {
                        out.push(TripleType::rank21(g, d1, d2).unwrap());
                    }
                }
            }
        }
        out
    }
}

/// A check returns `Ok(warnings)` when every hard invariant holds.
type Check = Box<dyn Fn() -> Result<Vec<String>, String> + Send + Sync>;

fn case(
    id: impl Into<String>,
    f: impl Fn() -> Result<Vec<String>, String> + Send + Sync + 'static,
) -> (String, Check) {
    (id.into(), Box::new(f))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn projective_invariants(h: &HodgeResult) -> Result<(), String> {
    let v = h.projective_violations();
    ensure(v.is_empty(), || {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join("; ")
    })
}

fn b0_warning(h: &HodgeResult) -> Vec<String> {
    match h.diagonal_coefficients().first() {
        Some(b0) if *b0 != BigInt::from(1) => vec![format!("b0 = {b0}")],
        _ => Vec::new(),
    }
}

fn err(e: hodge_core::HodgeError) -> String {
    e.to_string()
}

fn sample_polys() -> Vec<LaurentPoly> {
    let mut out = Vec::new();
    for i in 0..12i64 {
        let terms = (0..4).map(|j| {
            let a = (i * 7 + j * 3) % 7 - 3;
            let b = (i * 5 + j * 11) % 7 - 3;
            let c = (i * 13 + j * 17) % 19 - 9;
            (a, b, c)
        });
        out.push(LaurentPoly::from_terms(terms));
    }
    out
}

fn algebra_cases() -> Vec<(String, Check)> {
    let mut cases = Vec::new();
    let samples = sample_polys();
    for i in 0..samples.len() {
        let (p, q, r) = (
            samples[i].clone(),
            samples[(i + 1) % samples.len()].clone(),
            samples[(i + 5) % samples.len()].clone(),
        );
        cases.push(case(format!("ring-axioms/{i}"), move || {
            ensure(&(&p * &q) * &r == &p * &(&q * &r), || {
                "associativity".into()
            })?;
            ensure(&p * &q == &q * &p, || "commutativity".into())?;
            ensure(&p * &(&q + &r) == &(&p * &q) + &(&p * &r), || {
                "distributivity".into()
            })?;
            if !q.is_zero() {
                let back = (&p * &q).exact_div(&q).map_err(err)?;
                ensure(back == p, || "exact_div(p*q, q) != p".into())?;
                let f = FractionUV::new(&p * &r, &q * &r).map_err(err)?;
                ensure(f.normalize() == f, || "normalize changed the value".into())?;
            }
            let parsed: LaurentPoly = p.to_string().parse().map_err(err)?;
            ensure(parsed == p, || format!("text round trip of {p}"))?;
            let parsed = LaurentPoly::from_json(&p.to_json()).map_err(err)?;
            ensure(parsed == p, || format!("json round trip of {p}"))?;
            Ok(Vec::new())
        }));
    }
    cases.push(case("exact-division-examples", || {
        let p = |s: &str| s.parse::<LaurentPoly>().unwrap();
        let q = p("1 - u^3*v^3").exact_div(&p("1 - u*v")).map_err(err)?;
        ensure(q == p("1 + u*v + u^2*v^2"), || format!("got {q}"))?;
        ensure(p("1 + u").exact_div(&p("1 - u*v")).is_err(), || {
            "(1+u)/(1-uv) divided".into()
        })?;
        Ok(Vec::new())
    }));
    cases
}

fn zoo_cases(grid: &Grid) -> Vec<(String, Check)> {
    let mut cases = Vec::new();
    for &g in &grid.rank2_genera {
        for k in 0..=6 {
            cases.push(case(format!("sym/g={g}/k={k}"), move || {
                let s = e_sym(k, g);
                projective_invariants(&s)?;
                ensure(s.poly.coeff(0, 0) == BigInt::from(1), || {
                    "constant term".into()
                })?;
                Ok(Vec::new())
            }));
        }
    }
    for n in 0..=7 {
        cases.push(case(format!("grassmannian/N={n}"), move || {
            for k in 0..=n {
                let gr = e_grassmannian(k, n);
                projective_invariants(&gr)?;
                ensure(gr.poly == e_grassmannian(n - k, n).poly, || {
                    format!("Gr({k},{n}) symmetry")
                })?;
            }
            ensure(e_grassmannian(1, n).poly == e_projective(n).poly, || {
                "Gr(1,N) != P^{N-1}".into()
            })
            .map(|_| Vec::new())
        }));
    }
    cases.push(case("regressions", || {
        let p = |s: &str| s.parse::<LaurentPoly>().unwrap();
        ensure(
            e_sym(2, 2).poly
                == p("1 + 2*u + 2*v + u^2 + 5*u*v + v^2 + 2*u^2*v + 2*u*v^2 + u^2*v^2"),
            || "Sym^2 X, g=2".into(),
        )?;
        ensure(
            e_grassmannian(2, 4).poly == p("1 + u*v + 2*u^2*v^2 + u^3*v^3 + u^4*v^4"),
            || "Gr(2,4)".into(),
        )?;
        let quotient = e_sym2_quotient(&e_projective(2)).map_err(err)?;
        ensure(quotient.poly == e_projective(3).poly, || {
            "(P^1 x P^1)/Z_2 != P^2".into()
        })?;
        Ok(Vec::new())
    }));
    cases
}

fn chamber_midpoints(t: &TripleType) -> Vec<(usize, Rational64)> {
    (1..=t.chambers().len())
        .map(|k| (k, t.chamber_sigma(k).unwrap()))
        .collect()
}

fn rank2_cases(grid: &Grid) -> Vec<(String, Check)> {
    let mut cases = Vec::new();
    for &g in &grid.rank2_genera {
        cases.push(case(format!("m2odd/g={g}"), move || {
            projective_invariants(&e_m2_odd(g).map_err(err)?)?;
            Ok(Vec::new())
        }));
    }
    for t in grid.rank21() {
        cases.push(case(format!("triples21/g={}/{t}", t.g), move || {
            let mids = chamber_midpoints(&t);
            let values: Vec<HodgeResult> = mids
                .iter()
                .map(|&(_, s)| e_triples21(&t, s))
                .collect::<Result<_, _>>()
                .map_err(err)?;
            let mut warnings = Vec::new();
            for (h, (k, _)) in values.iter().zip(&mids) {
                projective_invariants(h).map_err(|e| format!("chamber {k}: {e}"))?;
                warnings.extend(
                    b0_warning(h)
                        .into_iter()
                        .map(|w| format!("chamber {k}: {w}")),
                );
            }
            for (i, (dm, sigma_c)) in t.criticals_21().into_iter().enumerate() {
                let below = &values[i].poly;
                let above = match values.get(i + 1) {
                    Some(h) => h.poly.clone(),
                    None => {
                        e_triples21(&t, Rational64::from_integer(sigma_c + 1))
                            .map_err(err)?
                            .poly
                    }
                };
                let minus = flip_locus21_below(&t, dm).map_err(err)?;
                let plus = flip_locus21_above(&t, dm).map_err(err)?;
                ensure(&above - below == &plus - &minus, || {
                    format!("wall crossing at d_M={dm}")
                })?;
                let stable = e_triples21_critical_stable(&t, dm).map_err(err)?;
                ensure(below - &minus == stable.poly, || {
                    format!("critical stable locus at d_M={dm}")
                })?;
            }
            Ok(warnings)
        }));
    }
    cases
}

fn flips_cases(grid: &Grid) -> Vec<(String, Check)> {
    let mut cases = Vec::new();
    for t in grid.rank31() {
        for (n, _) in t.criticals_31() {
            cases.push(case(format!("flip/g={}/{t}/n={n}", t.g), move || {
                let flip = c_n(&t, n).map_err(err)?;
                ensure(flip.cn.to_poly().is_ok(), || {
                    "C_n is not a polynomial".into()
                })?;
                if n % 2 == 1 {
                    let structural = c_n_odd_structural(&t, n).map_err(err)?;
                    let closed = c_n_odd(&t, n).map_err(err)?;
                    ensure(closed == FractionUV::from_poly(structural), || {
                        "odd routes differ".into()
                    })?;
                }
                for c in chi_fiber_checks(&t, n).map_err(err)? {
                    ensure(c.holds(), || {
                        format!("{}: -chi = {}, expected {}", c.label, c.value, c.expected)
                    })?;
                }
                Ok(Vec::new())
            }));
        }
    }
    cases
}

fn crosspath_cases(grid: &Grid) -> Vec<(String, Check)> {
    let mut cases = Vec::new();
    for t in grid.rank31() {
        for (k, sigma) in chamber_midpoints(&t) {
            cases.push(case(format!("n31/g={}/{t}/chamber={k}", t.g), move || {
                let closed = e_n31_closed(&t, sigma).map_err(err)?;
                let flips = e_n31_flipsum(&t, sigma).map_err(err)?;
                ensure(closed.poly == flips.poly, || {
                    "closed form != flip sum".into()
                })?;
                projective_invariants(&closed)?;
                let display = poincare_n31_display(&t, sigma).map_err(err)?;
                ensure(display == poincare(&closed).coeffs, || {
                    "Poincaré display differs".into()
                })?;
                Ok(b0_warning(&closed))
            }));
        }
    }
    cases
}

fn m3_cases(grid: &Grid) -> Vec<(String, Check)> {
    grid.m3_genera
        .iter()
        .map(|&g| {
            case(format!("m3/g={g}"), move || {
                let closed = e_m3(g).map_err(err)?;
                let pipeline = e_m3_via_pipeline(g).map_err(err)?;
                ensure(closed.poly == pipeline.poly, || {
                    "closed display != pipeline".into()
                })?;
                projective_invariants(&closed)?;
                let display = poincare_m3_display(g).map_err(err)?;
                ensure(display == poincare(&closed).coeffs, || {
                    "Poincaré display differs".into()
                })?;
                Ok(b0_warning(&closed))
            })
        })
        .collect()
}

fn suite_name(s: Suite) -> String {
    s.to_possible_value().unwrap().get_name().to_string()
}

pub fn run_suite(suite: Suite, preset: GridPreset) -> Vec<VerifyReport> {
    if suite == Suite::All {
        return [
            Suite::Algebra,
            Suite::Zoo,
            Suite::Rank2,
            Suite::Flips,
            Suite::Crosspath,
            Suite::M3,
        ]
        .into_iter()
        .flat_map(|s| run_suite(s, preset))
        .collect();
    }
    let grid = Grid::new(preset);
    let start = Instant::now();
    let cases = match suite {
        Suite::Algebra => algebra_cases(),
        Suite::Zoo => zoo_cases(&grid),
        Suite::Rank2 => rank2_cases(&grid),
        Suite::Flips => flips_cases(&grid),
        Suite::Crosspath => crosspath_cases(&grid),
        Suite::M3 => m3_cases(&grid),
        Suite::All => unreachable!(),
    };
    let results = cases
        .into_par_iter()
        .map(|(id, check)| match check() {
            Ok(warnings) if warnings.is_empty() => CaseResult {
                id,
                status: Status::Pass,
                detail: String::new(),
            },
            Ok(warnings) => CaseResult {
                id,
                status: Status::Warn,
                detail: warnings.join("; "),
            },
            Err(detail) => CaseResult {
                id,
                status: Status::Fail,
                detail,
            },
        })
        .collect();
    vec![VerifyReport {
        suite: suite_name(suite),
        grid: format!("{preset:?}").to_lowercase(),
        cases: results,
        wall_time_ms: start.elapsed().as_millis(),
    }]
}

pub fn run(args: &VerifyArgs) -> ExitCode {
    let reports = run_suite(args.suite, args.grid);
    let failed = reports.iter().any(|r| r.count(Status::Fail) > 0);
    match args.output {
        ReportFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&reports).unwrap());
        }
        ReportFormat::Text => {
            for r in &reports {
                for c in &r.cases {
                    match c.status {
                        Status::Pass => {}
                        Status::Warn => eprintln!("warn {}: {}", c.id, c.detail),
                        Status::Fail => println!("FAIL {}: {}", c.id, c.detail),
                    }
                }
                println!(
                    "{}: {} passed, {} warnings, {} failed ({} ms)",
                    r.suite,
                    r.count(Status::Pass),
                    r.count(Status::Warn),
                    r.count(Status::Fail),
                    r.wall_time_ms
                );
            }
        }
    }
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_grid_has_no_failures() {
        let reports = run_suite(Suite::All, GridPreset::Quick);
        assert_eq!(reports.len(), 6);
        for r in &reports {
            assert!(!r.cases.is_empty(), "{}", r.suite);
            assert_eq!(r.count(Status::Fail), 0, "{}", r.suite);
        }
    }

    #[test]
    fn full_grid_respects_the_degree_bound() {
        let grid = Grid::new(GridPreset::Full);
        assert!(grid.rank31().iter().all(|t| t.d1 - 3 * t.d2 > 0));
        assert!(grid.rank21().iter().all(|t| t.d1 - 2 * t.d2 > 0));
    }
}
