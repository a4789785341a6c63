//! Command-line surface: facet and grading reports, Hessenberg candidate
//! tables, the hyperspecial classification, rigidity audits, character
//! genericity, double-coset span checks, and rank-2 apartment plots.
//!
//! Exit codes: 0 when every requested check passed, 2 when a check
//! failed, 1 on input errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use euphotic::chargen::{count_generic, is_generic_a, is_generic_bcd, CharKind, CharacterTuple};
use euphotic::coset_span::verify_span_lemma;
use euphotic::error::Error;
use euphotic::grading::grade;
use euphotic::hessenberg::{enumerate_candidates, in_strip_region, EnumerationInput};
use euphotic::rat::parse_rat;
use euphotic::report::{self, Report};
use euphotic::root_system::{GroupType, RootSystem};
use euphotic::scenario::{run_audit, Scenario};
use euphotic::spherical::{enumerate_dim_eq, paper_list, ParabolicSpec};
use serde_json::json;
use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "euphotic", version, about = "exact root-system combinatorics workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    out: OutputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct GroupArgs {
    /// Group type: A, B, C, D, E6, E7, E8, F4, G2.
    #[arg(long = "type")]
    type_tag: String,
    /// Rank (required for classical types).
    #[arg(long)]
    rank: Option<usize>,
}

impl GroupArgs {
    fn build(&self) -> euphotic::Result<RootSystem> {
        let group = GroupType::parse(&self.type_tag)?;
        let rank = match (group.fixed_rank(), self.rank) {
            (Some(r), None) => r,
            (Some(r), Some(g)) if g == r => r,
            (Some(r), Some(g)) => {
                return Err(Error::Input(format!("type {group} has rank {r}, got {g}")))
            }
            (None, Some(g)) => g,
            (None, None) => return Err(Error::Input("--rank is required".into())),
        };
        RootSystem::build(group, rank)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Facet summary: m, barycenter and graded dimensions.
    Facet {
        #[command(flatten)]
        group: GroupArgs,
        /// Affine simple indices of the facet, e.g. 0,2.
        #[arg(long = "J", value_delimiter = ',')]
        j: Vec<usize>,
    },
    /// Full grading report with the three weight sets.
    Grade {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "J", value_delimiter = ',')]
        j: Vec<usize>,
    },
    /// Candidate table with gates for a scenario.
    Hessenberg {
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Dimension-equality classification against the canned case lists.
    Classify {
        #[arg(long = "type")]
        type_tag: String,
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
    },
    /// Rigidity numerology for a scenario.
    Audit {
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Character genericity checks and censuses.
    Chargen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        /// Count all generic tuples instead of testing one.
        #[arg(long, default_value_t = false)]
        count: bool,
        /// Exponents of a single tuple to test, e.g. 1,2.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        exps: Option<Vec<i64>>,
    },
    /// Double-coset span criterion for a parabolic pair.
    Spancheck {
        #[command(flatten)]
        group: GroupArgs,
        /// Levi label: "n" or "d" for P_d, "d,d'" for P_{d,d'}, or a
        /// partition like "4+2" in type A.
        #[arg(long)]
        psi: String,
        #[arg(long)]
        q: String,
    },
    /// SVG plot of a rank-2 apartment for a scenario.
    Plot {
        #[arg(long)]
        scenario: PathBuf,
        /// Output SVG path.
        #[arg(long)]
        out_file: PathBuf,
        /// Wall levels |n| <= N per root family.
        #[arg(long, default_value_t = 2)]
        levels: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    A,
    Bcd,
}

fn parse_parabolic(rs: &RootSystem, s: &str) -> euphotic::Result<ParabolicSpec> {
    if rs.group == GroupType::A {
        let parts: Vec<usize> = s
            .split(['+', ','])
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Input(format!("bad partition {s:?}"))))
            .collect::<euphotic::Result<_>>()?;
        return Ok(ParabolicSpec::partition(&parts));
    }
    if s == "n" {
        return Ok(ParabolicSpec::maximal(rs.group, rs.rank, rs.rank));
    }
    let nodes: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Input(format!("bad label {s:?}"))))
        .collect::<euphotic::Result<_>>()?;
    match nodes.len() {
        1 => Ok(ParabolicSpec::maximal(rs.group, rs.rank, nodes[0])),
        2 => Ok(ParabolicSpec::two_step(nodes[0], nodes[1])),
        _ => Err(Error::Input(format!("label {s:?} must name one or two nodes"))),
    }
}

/// Command result: the report plus whether every requested check passed.
fn run(cli: &Cli) -> euphotic::Result<(Report, bool)> {
    match &cli.command {
        Command::Facet { group, j } => {
            let rs = group.build()?;
            let facet = euphotic::affine::barycenter(&rs, j)?;
            let grading = grade(&rs, &facet)?;
            Ok((Report::new("facet", report::facet_report(&rs, &facet, &grading)), true))
        }
        Command::Grade { group, j } => {
            let rs = group.build()?;
            let facet = euphotic::affine::barycenter(&rs, j)?;
            let grading = grade(&rs, &facet)?;
            Ok((Report::new("grade", report::grading_report(&rs, &grading)), true))
        }
        Command::Hessenberg { scenario } => {
            let sc = Scenario::from_path(scenario)?;
            let rs = sc.root_system()?;
            let facet_p = sc.facet_p(&rs)?;
            let x_q = sc.x_q(&rs)?;
            let bound = sc.bound()?;
            let rules = sc.rules.clone();
            let input = EnumerationInput {
                facet_p: &facet_p,
                x_q: &x_q,
                lattice: sc.lattice(),
                bound,
                rules: rules.as_deref(),
                predicates: &sc.predicates,
            };
            let data = enumerate_candidates(&rs, &input)?;
            let strips = sc.region_strips.clone().unwrap_or_default();
            let rows: Vec<serde_json::Value> = data
                .iter()
                .map(|d| {
                    let in_region = if strips.is_empty() {
                        None
                    } else {
                        Some(in_strip_region(&rs, &strips, &d.y))
                    };
                    report::datum_json(&rs, d, in_region)
                })
                .collect();
            let body = json!({
                "scenario": sc.name,
                "group": format!("{}{}", rs.group, rs.rank),
                "x_q": x_q.strings(),
                "bound": euphotic::rat::format_rat(&sc.bound()?),
                "predicates": sc.predicates,
                "candidates": rows,
            });
            Ok((Report::new("hessenberg", body), true))
        }
        Command::Classify { type_tag, max_rank } => {
            let group = GroupType::parse(type_tag)?;
            let pairs = enumerate_dim_eq(group, *max_rank)?;
            let mut canned_total = 0usize;
            let mut canned_found = 0usize;
            for rank in 1..=*max_rank {
                if let Ok(list) = paper_list(group, rank) {
                    canned_total += list.len();
                    for c in list {
                        if pairs.iter().any(|p| {
                            p.rank == rank && p.psi_spec == c.psi_spec && p.q_spec == c.q_spec
                        }) {
                            canned_found += 1;
                        }
                    }
                }
            }
            let rows: Vec<serde_json::Value> = pairs
                .iter()
                .map(|p| {
                    json!({
                        "group": format!("{}{}", p.group, p.rank),
                        "psi": p.psi_spec.to_string(),
                        "q": p.q_spec.to_string(),
                        "dim_gpsi": p.dim_gpsi,
                        "dim_lq": p.dim_lq,
                        "n_roots": p.n_roots,
                        "in_paper_list": p.in_paper_list,
                        "cite": p.paper_case,
                    })
                })
                .collect();
            let all_canned_present = canned_found == canned_total;
            let body = json!({
                "type": group.to_string(),
                "max_rank": max_rank,
                "canned_cases": canned_total,
                "canned_cases_found": canned_found,
                "pairs": rows,
            });
            Ok((Report::new("classify", body), all_canned_present))
        }
        Command::Audit { scenario } => {
            let sc = Scenario::from_path(scenario)?;
            let rep = run_audit(&sc)?;
            let passes = rep.passes;
            Ok((report::ok("audit", &rep)?, passes))
        }
        Command::Chargen { kind, n, q, count, exps } => {
            let kind_enum = match kind {
                KindArg::A => CharKind::A,
                KindArg::Bcd => CharKind::BCD,
            };
            if *count {
                let c = count_generic(kind_enum, *n, *q)?;
                let body = json!({ "kind": format!("{kind_enum:?}"), "n": n, "q": q, "generic_count": c });
                return Ok((Report::new("chargen", body), true));
            }
            let Some(exps) = exps else {
                return Err(Error::Input("need --exps or --count".into()));
            };
            let chi = CharacterTuple { q: *q, exps: exps.clone() };
            let (ok, violations) = match kind_enum {
                CharKind::A => {
                    let (ok, v) = is_generic_a(*n, &chi)?;
                    (ok, json!(v))
                }
                CharKind::BCD => {
                    let (ok, v) = is_generic_bcd(*n, &chi)?;
                    (ok, json!(v))
                }
            };
            let body = json!({
                "kind": format!("{kind_enum:?}"), "n": n, "q": q, "exps": exps,
                "generic": ok, "violations": violations,
            });
            Ok((Report::new("chargen", body), ok))
        }
        Command::Spancheck { group, psi, q } => {
            let rs = group.build()?;
            let psi_spec = parse_parabolic(&rs, psi)?;
            let q_spec = parse_parabolic(&rs, q)?;
            let psi_nodes: BTreeSet<usize> = psi_spec.levi_nodes(&rs)?;
            let q_nodes: BTreeSet<usize> = q_spec.levi_nodes(&rs)?;
            let rep = verify_span_lemma(&rs, &psi_nodes, &q_nodes)?;
            let passes = rep.passes();
            let body = json!({
                "group": format!("{}{}", rs.group, rs.rank),
                "psi": psi_spec.to_string(),
                "q": q_spec.to_string(),
                "cosets": rep.cosets,
                "violations": rep.violations,
                "passes": passes,
            });
            Ok((Report::new("spancheck", body), passes))
        }
        Command::Plot { scenario, out_file, levels } => {
            let sc = Scenario::from_path(scenario)?;
            let rs = sc.root_system()?;
            let strips = sc.region_strips.clone().unwrap_or_default();
            let points = match (sc.facet_q.as_ref(), sc.bound.as_ref()) {
                (Some(_), Some(_)) => {
                    let x_q = sc.x_q(&rs)?;
                    let bound = parse_rat(sc.bound.as_ref().unwrap())?;
                    euphotic::affine::orbit_points(&rs, &x_q, sc.lattice(), &bound)?
                        .into_iter()
                        .map(|p| p.point)
                        .collect()
                }
                _ => Vec::new(),
            };
            let svg = euphotic::plot::plot_apartment(&rs, *levels, &strips, &points)?;
            std::fs::write(out_file, &svg)
                .map_err(|e| Error::Input(format!("cannot write {}: {e}", out_file.display())))?;
            let body = json!({
                "scenario": sc.name,
                "file": out_file.display().to_string(),
                "bytes": svg.len(),
                "points": points.len(),
            });
            Ok((Report::new("plot", body), true))
        }
    }
}

fn main() -> ExitCode {
    // EUPHOTIC_THREADS caps internal parallelism.
    if let Ok(threads) = std::env::var("EUPHOTIC_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
        }
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, passed)) => {
            match cli.out {
                OutputFormat::Json => println!("{}", report.to_json()),
                OutputFormat::Text => print!("{}", report::render_text(&report)),
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
