//! `curvenbhd`: curve neighborhoods, cosmall roots and quantum Chevalley
//! products from the command line.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use curvenbhd::degree::conjecture_scan;
use curvenbhd::nbhd::degree_distance;
use curvenbhd::weyl::parse_subset;
use curvenbhd::{
    cosmall_criteria, curve_neighborhood, greedy, gw_two_point, hecke_mul, is_cosmall,
    ktheory_two_point, neighborhood_oracle, quantum_chevalley, z_of_degree, Degree, Error,
    MomentGraph, Parabolic, WeylGroup, DEFAULT_ORACLE_CAP,
};
use serde_json::{json, Value};

const LABEL_HELP: &str = "\
Simple roots are numbered 1..n in Bourbaki order. For the classical types
written in the e-basis (β_i = e_{i+1} - e_i), the labels map as follows:

  A_{n-1}  β_i                 -> i
  B_n      β_0 = e_1           -> n,   β_i (i ≥ 1) -> n - i
  C_n      β̂_0 = 2e_1          -> n,   β_i (i ≥ 1) -> n - i
  D_n      β_{-1} = e_2 + e_1  -> n,   β_i (i ≥ 1) -> n - i

Elements are words of 1-based simple indices such as \"2 1 2\" or \"e\".
Degrees list the coordinates over Δ ∖ Δ_P (e.g. \"1,2\"); a full
rank-length coroot vector is projected. The coset cap can also be set
through CURVENBHD_CAP.

Exit status: 0 success, 2 usage or configuration error, 3 resource cap.";

#[derive(Parser)]
#[command(name = "curvenbhd", version, about, after_help = LABEL_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct Space {
    /// Cartan type such as A3, B2, G2
    #[arg(long = "type", value_name = "TYPE")]
    type_label: String,
    /// Simple roots of Δ_P, 1-based and comma separated
    #[arg(long, default_value = "")]
    parabolic: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct Cap {
    /// Maximum number of cosets to enumerate
    #[arg(long, env = "CURVENBHD_CAP")]
    cap: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots with coroots, lengths and cosmall flags
    Roots {
        #[command(flatten)]
        space: Space,
    },
    /// P-cosmall roots
    Cosmall {
        #[command(flatten)]
        space: Space,
    },
    /// Greedy decomposition of a degree
    Greedy {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        degree: String,
    },
    /// The element z_d^P
    Zd {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        degree: String,
    },
    /// The curve neighborhood Γ_d(X(w))
    Nbhd {
        #[command(flatten)]
        space: Space,
        #[arg(long, default_value = "e")]
        w: String,
        #[arg(long)]
        degree: String,
    },
    /// Γ_d(X(w)) by path search in the moment graph
    Oracle {
        #[command(flatten)]
        space: Space,
        #[command(flatten)]
        cap: Cap,
        #[arg(long, default_value = "e")]
        w: String,
        #[arg(long)]
        degree: String,
    },
    /// The moment graph of G/P
    MomentGraph {
        #[command(flatten)]
        space: Space,
        #[command(flatten)]
        cap: Cap,
    },
    /// Hecke product u · v (as a coset when a parabolic is given)
    Hecke {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Bruhat comparison u ≤ v (of cosets when a parabolic is given)
    Bruhat {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Equivariant quantum Chevalley product [Y(u)] ⋆ [Y(s_β)]
    Chevalley {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        u: String,
        /// 1-based index of β in Δ ∖ Δ_P
        #[arg(long)]
        beta: usize,
    },
    /// Two-point Gromov-Witten invariant I_d([Y(u)], [X(w)])
    Gw2 {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        u: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        degree: String,
    },
    /// K-theoretic two-point invariant
    Kgw2 {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        u: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        degree: String,
    },
    /// Degree distance from 1.P to u.P on a cominuscule G/P
    Distance {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        u: String,
    },
    /// Compare P-cosmall with z^P_{α∨} W_P = s_α W_P (simply-laced types)
    Conjecture {
        #[command(flatten)]
        space: Space,
    },
}

fn parabolic(space: &Space) -> Result<Parabolic, Error> {
    let g = WeylGroup::from_label(&space.type_label)?;
    let subset = parse_subset(&space.parabolic, g.rank())?;
    Parabolic::new(g, &subset)
}

fn text_only(space: &Space, allowed: &[Format]) -> Result<(), Error> {
    if allowed.contains(&space.format) {
        Ok(())
    } else {
        Err(Error::Usage(
            "this subcommand does not support that format".into(),
        ))
    }
}

fn emit(space: &Space, text: String, json: Value) -> String {
    match space.format {
        Format::Json => format!("{json}\n"),
        _ => text,
    }
}

/// Text tables with columns padded to their widest cell.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn run(command: Command) -> Result<String, Error> {
    match command {
        Command::Roots { space } => {
            text_only(&space, &[Format::Text, Format::Json])?;
            let p = parabolic(&space)?;
            let rs = p.roots();
            let mut rows = Vec::new();
            let mut items = Vec::new();
            for r in rs.positive_roots() {
                let cosmall = if p.in_levi(r.index) {
                    None
                } else {
                    Some(is_cosmall(&p, r)?)
                };
                let flag = match cosmall {
                    None => "levi",
                    Some(true) => "yes",
                    Some(false) => "no",
                };
                rows.push(vec![
                    (r.index + 1).to_string(),
                    rs.format_root(r),
                    rs.format_coroot(r),
                    if r.is_long { "long" } else { "short" }.to_string(),
                    r.height().to_string(),
                    flag.to_string(),
                ]);
                items.push(json!({
                    "index": r.index + 1,
                    "root": r.coords,
                    "coroot": r.coroot,
                    "long": r.is_long,
                    "height": r.height(),
                    "cosmall": cosmall,
                }));
            }
            let text = table(
                &["#", "root", "coroot", "length", "height", "cosmall"],
                &rows,
            );
            Ok(emit(&space, text, Value::Array(items)))
        }
        Command::Cosmall { space } => {
            text_only(&space, &[Format::Text, Format::Json])?;
            let p = parabolic(&space)?;
            let rs = p.roots();
            let mut text = String::new();
            let mut items = Vec::new();
            let mut outside: Vec<_> = p.outside_roots().collect();
            outside.sort_by(|a, b| {
                a.height()
                    .cmp(&b.height())
                    .then_with(|| b.coords.cmp(&a.coords))
            });
            for r in outside {
                let c = cosmall_criteria(&p, r)?;
                if c.is_p_cosmall {
                    let _ = writeln!(text, "{}", rs.format_root(r));
                    items.push(json!({ "root": r.coords, "label": rs.format_root(r) }));
                }
            }
            Ok(emit(&space, text, Value::Array(items)))
        }
        Command::Greedy { space, degree } => {
            text_only(&space, &[Format::Text, Format::Json])?;
            let p = parabolic(&space)?;
            let d = Degree::parse(&p, &degree)?;
            let dec = greedy(&p, &d)?;
            let rs = p.roots();
            let labels: Vec<String> = dec
                .roots
                .iter()
                .map(|&i| rs.format_root(rs.root(i)))
                .collect();
            let roots: Vec<&Vec<i32>> = dec.roots.iter().map(|&i| &rs.root(i).coords).collect();
            let text = format!("{}\n", labels.join(" "));
            Ok(emit(
                &space,
                text,
                json!({ "degree": d.to_string(), "roots": roots, "labels": labels }),
            ))
        }
        Command::Zd { space, degree } => {
            text_only(&space, &[Format::Text, Format::Json])?;
            let p = parabolic(&space)?;
            let d = Degree::parse(&p, &degree)?;
            let g = p.group();
            let z = if d.is_zero() {
                g.identity()
            } else {
                z_of_degree(&p, &d)?.z_min
            };
            let word = g.format(&z);
            Ok(emit(
                &space,
                format!("{word}\n"),
                json!({ "degree": d.to_string(), "z": word, "length": g.length(&z) }),
            ))
        }
        Command::Nbhd { space, w, degree } => {
            text_only(&space, &[Format::Text, Format::Json])?;
            let p = parabolic(&space)?;
            let g = p.group();
            let w = g.parse_element(&w)?;
            let d = Degree::parse(&p, &degree)?;
            let c = curve_neighborhood(&p, &w, &d)?;
            let word = p.format_coset(&c);
            let length = p.coset_length(c.min_rep());
            Ok(emit(
                &space,
                format!("{word}\n"),
                json!({
                    "w": p.format_coset(&p.coset(&w)),
                    "degree": d.to_string(),
                    "coset": word,
                    "length": length,
                }),
            ))
        }
        Command::Oracle {
            space,
            cap,
            w,
            degree,
        } => {
            text_only(&space, &[Format::Text, Format::Json])?;
            let p = parabolic(&space)?;
            let g = p.group();
            let w = g.parse_element(&w)?;
            let d = Degree::parse(&p, &degree)?;
            let graph = MomentGraph::build(&p, cap.cap.unwrap_or(DEFAULT_ORACLE_CAP))?;
            let reached = neighborhood_oracle(&graph, &w, &d)?;
            let words: Vec<String> = reached.iter().map(|c| p.format_coset(c)).collect();
            let mut text = String::new();
            for word in &words {
                let _ = writeln!(text, "{word}");
            }
            Ok(emit(
                &space,
                text,
                json!({ "degree": d.to_string(), "cosets": words }),
            ))
        }
        Command::MomentGraph { space, cap } => {
            let p = parabolic(&space)?;
            let graph = MomentGraph::build(&p, cap.cap.unwrap_or(DEFAULT_ORACLE_CAP))?;
            Ok(match space.format {
                Format::Dot => graph.to_dot(),
                Format::Json => {
                    let v = serde_json::to_string(&graph.to_json())
                        .map_err(|e| Error::Internal(e.to_string()))?;
                    format!("{v}\n")
                }
                Format::Text => {
                    let rs = p.roots();
                    let rows: Vec<Vec<String>> = graph
                        .edges()
                        .iter()
                        .map(|e| {
                            vec![
                                graph.vertex_label(e.source),
                                graph.vertex_label(e.target),
                                e.degree.to_string(),
                                rs.format_root(rs.root(e.root)),
                            ]
                        })
                        .collect();
                    table(&["source", "target", "degree", "root"], &rows)
                }
            })
        }
        Command::Hecke { space, u, v } => {
            text_only(&space, &[Format::Text, Format::Json])?;
            let p = parabolic(&space)?;
            let g = p.group();
            let (u, v) = (g.parse_element(&u)?, g.parse_element(&v)?);
            let prod = hecke_mul(g, &u, &v);
            let word = if p.subset().is_empty() {
                g.format(&prod)
            } else {
                p.format_coset(&p.coset(&prod))
            };
            Ok(emit(
                &space,
                format!("{word}\n"),
                json!({ "product": word }),
            ))
        }
        Command::Bruhat { space, u, v } => {
            text_only(&space, &[Format::Text, Format::Json])?;
            let p = parabolic(&space)?;
            let g = p.group();
            let (u, v) = (g.parse_element(&u)?, g.parse_element(&v)?);
            let leq = p.bruhat_leq_coset(&u, &v);
            Ok(emit(&space, format!("{leq}\n"), json!({ "leq": leq })))
        }
        Command::Chevalley { space, u, beta } => {
            text_only(&space, &[Format::Text, Format::Json])?;
            let p = parabolic(&space)?;
            let g = p.group();
            let u = g.parse_element(&u)?;
            if beta == 0 || beta > p.rank() {
                return Err(Error::Usage(format!("β{beta} is out of range")));
            }
            let res = quantum_chevalley(&p, &u, beta - 1)?;
            let json = serde_json::to_value(res.to_json(&p))
                .map_err(|e| Error::Internal(e.to_string()))?;
            let mut rows = Vec::new();
            for t in &res.classical {
                rows.push(vec![
                    "classical".into(),
                    "0".into(),
                    p.format_coset(&t.coset),
                    t.coeff.to_string(),
                ]);
            }
            if res.weight.iter().any(|&c| c != 0) {
                let weight = curvenbhd::rootsys::format_combination(&res.weight, "α");
                rows.push(vec![
                    "equivariant".into(),
                    "0".into(),
                    p.format_coset(&p.coset(&u)),
                    format!("c_T({weight})"),
                ]);
            }
            for t in &res.quantum {
                rows.push(vec![
                    "quantum".into(),
                    t.degree.to_string(),
                    p.format_coset(&t.coset),
                    t.coeff.to_string(),
                ]);
            }
            let text = table(&["kind", "degree", "coset", "coeff"], &rows);
            Ok(emit(&space, text, json))
        }
        Command::Gw2 {
            space,
            u,
            w,
            degree,
        } => two_point(&space, &u, &w, &degree, false),
        Command::Kgw2 {
            space,
            u,
            w,
            degree,
        } => two_point(&space, &u, &w, &degree, true),
        Command::Distance { space, u } => {
            text_only(&space, &[Format::Text, Format::Json])?;
            let p = parabolic(&space)?;
            let u = p.group().parse_element(&u)?;
            let dist = degree_distance(&p, &u)?;
            Ok(emit(
                &space,
                format!("{dist}\n"),
                json!({ "distance": dist }),
            ))
        }
        Command::Conjecture { space } => {
            text_only(&space, &[Format::Text, Format::Json])?;
            let p = parabolic(&space)?;
            let rs = p.roots();
            let bad = conjecture_scan(&p)?;
            let checked = p.outside_roots().count();
            let labels: Vec<String> = bad.iter().map(|r| rs.format_root(r)).collect();
            let mut text = format!("checked {checked} roots, {} counterexamples\n", bad.len());
            for l in &labels {
                let _ = writeln!(text, "{l}");
            }
            Ok(emit(
                &space,
                text,
                json!({ "checked": checked, "counterexamples": labels }),
            ))
        }
    }
}

fn two_point(
    space: &Space,
    u: &str,
    w: &str,
    degree: &str,
    ktheory: bool,
) -> Result<String, Error> {
    text_only(space, &[Format::Text, Format::Json])?;
    let p = parabolic(space)?;
    let g = p.group();
    let (u, w) = (g.parse_element(u)?, g.parse_element(w)?);
    let d = Degree::parse(&p, degree)?;
    let value = if ktheory {
        ktheory_two_point(&p, &u, &w, &d)?
    } else {
        gw_two_point(&p, &u, &w, &d)?
    };
    Ok(emit(space, format!("{value}\n"), json!({ "value": value })))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Usage(_) | Error::Config(_) => 2,
        Error::Resource { .. } => 3,
        Error::Internal(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            // Keep clap's message on one line, dropping the usage block.
            let msg = e.to_string();
            let line: Vec<&str> = msg
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:"))
                .filter(|l| !l.is_empty())
                .collect();
            eprintln!("{}", line.join(" "));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("curvenbhd: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
