use clap::{Args, ValueEnum};
use hodge_core::moduli::{e_m3, e_n31_closed_chamber};
use hodge_core::rank2::{e_m2_odd, e_m2s_even, e_triples21_chamber};
use hodge_core::zoo::{e_grassmannian, e_jacobian, e_projective, e_sym};
use hodge_core::{HodgeResult, TripleType};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use crate::compute::genus;
use crate::UsageError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableTarget {
    N31,
    N21,
    M3,
    M2odd,
    M2even,
    Sym,
    Jac,
    Grass,
    Proj,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// Comma-separated list of targets.
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    pub targets: Vec<TableTarget>,
    #[arg(long, value_delimiter = ',')]
    pub g: Vec<i64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub d1: Vec<i64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub d2: Vec<i64>,
    /// proj: P^{n-1} for each n.
    #[arg(long, value_delimiter = ',')]
    pub n: Vec<i64>,
    /// sym: Sym^k; grass: Gr(k, N).
    #[arg(long, value_delimiter = ',')]
    pub k: Vec<i64>,
    #[arg(long = "N", value_delimiter = ',')]
    pub big_n: Vec<i64>,
    #[arg(long, value_enum, default_value = "csv")]
    pub output: TableFormat,
}

#[derive(Clone, Debug, Default)]
struct RowSpec {
    target: &'static str,
    g: Option<i64>,
    d1: Option<i64>,
    d2: Option<i64>,
    k: Option<i64>,
    n: Option<i64>,
    chamber: Option<usize>,
}

struct Row {
    spec: RowSpec,
    sigma: Option<String>,
    result: HodgeResult,
}

fn need<'a>(values: &'a [i64], flag: &str, target: &str) -> Result<&'a [i64], UsageError> {
    if values.is_empty() {
        return Err(UsageError(format!(
            "table target {target} requires --{flag}"
        )));
    }
    Ok(values)
}

fn specs(args: &TableArgs) -> Result<Vec<RowSpec>, UsageError> {
    let mut out = Vec::new();
    for &target in &args.targets {
        match target {
            TableTarget::N31 | TableTarget::N21 => {
                let name = if target == TableTarget::N31 {
                    "n31"
                } else {
                    "n21"
                };
                for &g in need(&args.g, "g", name)? {
                    genus(g)?;
                    for &d1 in need(&args.d1, "d1", name)? {
                        for &d2 in need(&args.d2, "d2", name)? {
                            let t = if target == TableTarget::N31 {
                                TripleType::rank31(g, d1, d2)?
                            } else {
                                TripleType::rank21(g, d1, d2)?
                            };
                            for c in 1..=t.chambers().len() {
                                out.push(RowSpec {
                                    target: name,
                                    g: Some(g),
                                    d1: Some(d1),
                                    d2: Some(d2),
                                    chamber: Some(c),
                                    ..Default::default()
                                });
                            }
                        }
                    }
                }
            }
            TableTarget::M3 | TableTarget::M2odd | TableTarget::M2even | TableTarget::Jac => {
                let name = match target {
                    TableTarget::M3 => "m3",
                    TableTarget::M2odd => "m2odd",
                    TableTarget::M2even => "m2even",
                    _ => "jac",
                };
                for &g in need(&args.g, "g", name)? {
                    genus(g)?;
                    out.push(RowSpec {
                        target: name,
                        g: Some(g),
                        ..Default::default()
                    });
                }
            }
            TableTarget::Sym => {
                for &g in need(&args.g, "g", "sym")? {
                    genus(g)?;
                    for &k in need(&args.k, "k", "sym")? {
                        out.push(RowSpec {
                            target: "sym",
                            g: Some(g),
                            k: Some(k),
                            ..Default::default()
                        });
                    }
                }
            }
            TableTarget::Grass => {
                for &k in need(&args.k, "k", "grass")? {
                    for &n in need(&args.big_n, "N", "grass")? {
                        out.push(RowSpec {
                            target: "grass",
                            k: Some(k),
                            n: Some(n),
                            ..Default::default()
                        });
                    }
                }
            }
            TableTarget::Proj => {
                for &n in need(&args.n, "n", "proj")? {
                    out.push(RowSpec {
                        target: "proj",
                        n: Some(n),
                        ..Default::default()
                    });
                }
            }
        }
    }
    Ok(out)
}

fn evaluate(spec: RowSpec) -> Result<Row, UsageError> {
    let g = || spec.g.map(|g| g as u32).unwrap_or(2);
    let triple = |rank31: bool| {
        let (g, d1, d2) = (spec.g.unwrap(), spec.d1.unwrap(), spec.d2.unwrap());
        if rank31 {
            TripleType::rank31(g, d1, d2)
        } else {
            TripleType::rank21(g, d1, d2)
        }
    };
    let mut sigma = None;
    let result = match spec.target {
        "n31" | "n21" => {
            let t = triple(spec.target == "n31")?;
            let c = spec.chamber.unwrap();
            sigma = Some(t.chamber_sigma(c)?.to_string());
            if spec.target == "n31" {
                e_n31_closed_chamber(&t, c)?
            } else {
                e_triples21_chamber(&t, c)?
            }
        }
        "m3" => e_m3(g())?,
        "m2odd" => e_m2_odd(g())?,
        "m2even" => e_m2s_even(g())?,
        "jac" => e_jacobian(g()),
        "sym" => e_sym(spec.k.unwrap(), g()),
        "grass" => e_grassmannian(spec.k.unwrap(), spec.n.unwrap()),
        "proj" => e_projective(spec.n.unwrap()),
        other => unreachable!("unknown table target {other}"),
    };
    Ok(Row {
        spec,
        sigma,
        result,
    })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

pub fn run(args: &TableArgs) -> Result<String, UsageError> {
    let rows: Vec<Row> = specs(args)?
        .into_par_iter()
        .map(evaluate)
        .collect::<Result<_, _>>()?;
    let betti: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.result.diagonal_coefficients())
        .collect();
    match args.output {
        TableFormat::Json => {
            let list: Vec<_> = rows
                .iter()
                .zip(&betti)
                .map(|(r, b)| {
                    json!({
                        "target": r.spec.target,
                        "g": r.spec.g,
                        "d1": r.spec.d1,
                        "d2": r.spec.d2,
                        "k": r.spec.k,
                        "n": r.spec.n,
                        "chamber": r.spec.chamber,
                        "sigma": r.sigma,
                        "dim": r.result.dim,
                        "empty": r.result.flags.empty,
                        "poincare": r.result.flags.smooth_projective,
                        "betti": b.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(format!(
                "{}\n",
                serde_json::to_string_pretty(&json!(list)).unwrap()
            ))
        }
        TableFormat::Csv => {
            let width = rows
                .iter()
                .zip(&betti)
                .map(|(r, b)| b.len().max(2 * r.result.dim.max(0) as usize + 1))
                .max()
                .unwrap_or(0);
            let mut out = String::from("target,g,d1,d2,k,n,chamber,sigma,dim,empty");
            for i in 0..width {
                out += &format!(",b{i}");
            }
            out.push('\n');
            for (r, b) in rows.iter().zip(&betti) {
                let s = &r.spec;
                out += &format!(
                    "{},{},{},{},{},{},{},{},{},{}",
                    s.target,
                    opt(&s.g),
                    opt(&s.d1),
                    opt(&s.d2),
                    opt(&s.k),
                    opt(&s.n),
                    opt(&s.chamber),
                    opt(&r.sigma),
                    r.result.dim,
                    r.result.flags.empty
                );
                for i in 0..width {
                    out += &format!(",{}", b.get(i).cloned().unwrap_or_default());
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}
