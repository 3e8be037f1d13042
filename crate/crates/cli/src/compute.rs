use clap::{Args, ValueEnum};
use hodge_core::moduli::{e_m3, e_m3_for_degree, e_n31_closed};
use hodge_core::rank2::{e_m2_odd, e_m2s_even, e_triples21};
use hodge_core::zoo::{e_grassmannian, e_jacobian, e_projective, e_sym};
use hodge_core::{HodgeResult, TripleType};
use num_rational::Rational64;
use serde_json::json;

use crate::{Output, UsageError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    N31,
    N21,
    M2odd,
    M2even,
    M3,
    Sym,
    Jac,
    Grass,
    Proj,
    Criticals,
    Chambers,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Ranks {
    #[value(name = "31")]
    R31,
    #[value(name = "21")]
    R21,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[arg(value_enum)]
    pub target: Target,
    /// Genus of the curve.
    #[arg(long)]
    pub g: Option<i64>,
    #[arg(long)]
    pub d1: Option<i64>,
    #[arg(long)]
    pub d2: Option<i64>,
    /// Stability parameter, an integer or an exact rational p/q.
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: Option<String>,
    /// 1-based chamber index; σ is taken at the chamber midpoint.
    #[arg(long, conflicts_with = "sigma")]
    pub chamber: Option<usize>,
    /// Symmetric power (sym) or subspace dimension (grass).
    #[arg(long)]
    pub k: Option<i64>,
    /// proj: the space P^{n-1}.
    #[arg(long)]
    pub n: Option<i64>,
    /// grass: ambient dimension of Gr(k, N).
    #[arg(long = "N")]
    pub big_n: Option<i64>,
    /// m3: the degree, which must be prime to 3.
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<i64>,
    /// Ranks of the triple for criticals/chambers.
    #[arg(long, value_enum, default_value = "31")]
    pub ranks: Ranks,
    #[arg(long, value_enum, default_value = "text")]
    pub output: Output,
}

fn target_name(t: Target) -> String {
    t.to_possible_value().unwrap().get_name().to_string()
}

pub fn require<T: Copy>(value: Option<T>, flag: &str, target: &str) -> Result<T, UsageError> {
    value.ok_or_else(|| UsageError(format!("compute {target} requires --{flag}")))
}

pub fn genus(g: i64) -> Result<u32, UsageError> {
    if !(2..=1000).contains(&g) {
        return Err(UsageError(format!(
            "--g must be between 2 and 1000, got {g}"
        )));
    }
    Ok(g as u32)
}

pub fn parse_sigma(s: &str) -> Result<Rational64, UsageError> {
    let bad = || {
        UsageError(format!(
            "sigma must be an integer or an exact rational p/q, got {s:?}"
        ))
    };
    if let Some((_, den)) = s.split_once('/') {
        if den.trim().parse::<i64>().map_err(|_| bad())? == 0 {
            return Err(UsageError(format!("sigma has a zero denominator: {s:?}")));
        }
    }
    s.trim().parse::<Rational64>().map_err(|_| bad())
}

fn triple(args: &ComputeArgs, ranks: Ranks, target: &str) -> Result<TripleType, UsageError> {
    let g = require(args.g, "g", target)?;
    genus(g)?;
    let d1 = require(args.d1, "d1", target)?;
    let d2 = require(args.d2, "d2", target)?;
    Ok(match ranks {
        Ranks::R31 => TripleType::rank31(g, d1, d2)?,
        Ranks::R21 => TripleType::rank21(g, d1, d2)?,
    })
}

fn sigma_for(args: &ComputeArgs, t: &TripleType, target: &str) -> Result<Rational64, UsageError> {
    match (&args.sigma, args.chamber) {
        (Some(s), None) => parse_sigma(s),
        (None, Some(k)) => Ok(t.chamber_sigma(k)?),
        _ => Err(UsageError(format!(
            "compute {target} requires --sigma or --chamber; {t} has {} chambers",
            t.chambers().len()
        ))),
    }
}

pub fn run(args: &ComputeArgs) -> Result<String, UsageError> {
    let name = target_name(args.target);
    let name = name.as_str();
    let result = match args.target {
        Target::Criticals => return Ok(render_criticals(&triple(args, args.ranks, name)?, args)),
        Target::Chambers => {
            return Ok(render_chambers(
                &triple(args, args.ranks, name)?,
                args.output,
            ))
        }
        Target::N31 => {
            let t = triple(args, Ranks::R31, name)?;
            e_n31_closed(&t, sigma_for(args, &t, name)?)?
        }
        Target::N21 => {
            let t = triple(args, Ranks::R21, name)?;
            e_triples21(&t, sigma_for(args, &t, name)?)?
        }
        Target::M2odd => e_m2_odd(genus(require(args.g, "g", name)?)?)?,
        Target::M2even => e_m2s_even(genus(require(args.g, "g", name)?)?)?,
        Target::M3 => {
            let g = genus(require(args.g, "g", name)?)?;
            match args.d {
                Some(d) => e_m3_for_degree(g, d)?,
                None => e_m3(g)?,
            }
        }
        Target::Sym => {
            let k = require(args.k, "k", name)?;
            if k < 0 {
                return Err(UsageError(format!("--k must be nonnegative, got {k}")));
            }
            e_sym(k, genus(require(args.g, "g", name)?)?)
        }
        Target::Jac => e_jacobian(genus(require(args.g, "g", name)?)?),
        Target::Grass => {
            let k = require(args.k, "k", name)?;
            let n = require(args.big_n, "N", name)?;
            if !(0..=n).contains(&k) {
                return Err(UsageError(format!(
                    "Gr(k, N) needs 0 <= k <= N, got k={k}, N={n}"
                )));
            }
            e_grassmannian(k, n)
        }
        Target::Proj => {
            let n = require(args.n, "n", name)?;
            if n < 1 {
                return Err(UsageError(format!("--n must be at least 1, got {n}")));
            }
            e_projective(n)
        }
    };
    Ok(render_result(name, &result, args.output))
}

pub fn render_result(target: &str, h: &HodgeResult, output: Output) -> String {
    match output {
        Output::Json => {
            let mut v = h.to_json();
            v["target"] = json!(target);
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
        Output::Text | Output::Latex => {
            let (poly, prefix) = if output == Output::Latex {
                (h.poly.to_latex(), "% ")
            } else {
                (h.poly.to_string(), "")
            };
            let mut out = format!("{poly}\n");
            out += &format!("{prefix}dim: {}\n", h.dim);
            out += &format!("{prefix}smooth_projective: {}\n", h.flags.smooth_projective);
            out += &format!("{prefix}empty: {}\n", h.flags.empty);
            if let Some(c) = &h.chamber {
                let upper = c.upper.map_or("inf".to_string(), |u| u.to_string());
                let index = c.index.map_or(String::new(), |i| format!("{i} "));
                out += &format!(
                    "{prefix}chamber: {index}sigma={} in ({}, {upper})\n",
                    c.sigma, c.lower
                );
            }
            out
        }
    }
}

fn render_criticals(t: &TripleType, args: &ComputeArgs) -> String {
    let (label, pairs) = match args.ranks {
        Ranks::R31 => ("n", t.criticals_31()),
        Ranks::R21 => ("d_M", t.criticals_21()),
    };
    match args.output {
        Output::Json => {
            let list: Vec<_> = pairs
                .iter()
                .map(|&(n, s)| json!({ label: n, "sigma": s.to_string() }))
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&json!(list)).unwrap())
        }
        Output::Text | Output::Latex => {
            if pairs.is_empty() {
                return "none\n".to_string();
            }
            let items: Vec<String> = pairs
                .iter()
                .map(|(n, s)| format!("{label}={n} σ={s}"))
                .collect();
            format!("{}\n", items.join("; "))
        }
    }
}

fn render_chambers(t: &TripleType, output: Output) -> String {
    let chambers = t.chambers();
    match output {
        Output::Json => {
            let list: Vec<_> = chambers
                .iter()
                .enumerate()
                .map(|(i, (lo, hi))| {
                    json!({
                        "index": i + 1,
                        "lower": lo.to_string(),
                        "upper": hi.to_string(),
                        "sigma": ((lo + hi) / 2).to_string(),
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&json!(list)).unwrap())
        }
        Output::Text | Output::Latex => {
            if chambers.is_empty() {
                return "none\n".to_string();
            }
            chambers
                .iter()
                .enumerate()
                .map(|(i, (lo, hi))| {
                    format!("chamber {}: ({lo}, {hi}) sigma={}\n", i + 1, (lo + hi) / 2)
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_parsing() {
        assert_eq!(parse_sigma("7/3").unwrap(), Rational64::new(7, 3));
        assert_eq!(parse_sigma("-2").unwrap(), Rational64::from_integer(-2));
        assert!(parse_sigma("1/0")
            .unwrap_err()
            .0
            .contains("zero denominator"));
        assert!(parse_sigma("2.5").is_err());
    }

    #[test]
    fn genus_bounds() {
        assert!(genus(1).is_err());
        assert_eq!(genus(2).unwrap(), 2);
        assert!(genus(1001).is_err());
    }
}
