//! Command-line front end.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{bounds_report, crm_upper, improved_bound, moore_bipartite};
use crate::error::{Error, Result};
use crate::families::{
    automorphism_permutation, bd_digraph, bdm, bdm_canonical, bdm_star, canonical_m, cdrm, crm,
    crm_optimal, lift, pattern_alternating, pattern_u_shortcut, pattern_v_shortcut, u_endpoint,
    v_endpoint, walk_pattern, BdmVertex, CdrmConvention, NamedAutomorphism, VoltageBaseGraph,
};
use crate::format::{parse_any, render, Format};
use crate::graph::{bipartition, validate_and_profile, verify_automorphism, MixedGraph};
use crate::metrics::{diameter, eccentricity_report, Distance};
use crate::search::{cdrm_scan, exhaustive_max_order, lift_search, LiftTemplate};
use crate::spectral::{bdm5_polynomial_matrix, format_complex, spectrum_by_root};

#[derive(Debug, Parser)]
#[command(name = "bimixed", version, about = "Bipartite (1,1,k)-mixed graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Upper bounds on the order for diameter k.
    Bounds {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 1)]
        r: u64,
        #[arg(long, default_value_t = 1)]
        z: u64,
    },
    /// Build a graph from one of the families.
    Construct {
        #[command(subcommand)]
        family: Family,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Degrees, bipartiteness, diameter and radii of a graph file.
    Analyze { path: PathBuf },
    /// Maximum-order searches.
    Search {
        #[command(subcommand)]
        kind: SearchCommand,
    },
    /// Spectrum of a lift from its polynomial matrix.
    Spectrum {
        #[arg(value_enum)]
        which: SpectrumTarget,
    },
    /// Recompute one of the bound tables.
    Table {
        #[arg(value_parser = ["1", "6"])]
        which: String,
    },
    /// Check a group of properties, one PASS/FAIL line per item.
    Verify {
        #[arg(value_enum)]
        suite: VerifySuite,
    },
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Edges)]
    pub format: FormatArg,
    /// Write here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Edges,
    Dot,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edges => Format::Edges,
            FormatArg::Dot => Format::Dot,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// BDM(2,m), given m or the diameter parameter n (m = 2^(n-1) + 2^(n-3)).
    Bdm {
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        m: Option<usize>,
        #[arg(long)]
        n: Option<u32>,
    },
    /// The totally regular variant BDM*(2,m) for m = 2^(n-1) + 2^(n-3).
    BdmStar {
        #[arg(long)]
        n: u32,
    },
    /// The digraph BD(2,m).
    Bd {
        #[arg(long)]
        m: usize,
    },
    /// CRM(n,c), or the optimal one for diameter k.
    Crm {
        #[arg(long, requires = "c", conflicts_with = "k", required_unless_present = "k")]
        n: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Chordal double ring on 2m vertices.
    Cdrm {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        c: usize,
        #[arg(long, value_enum, default_value_t = ConventionArg::Shift)]
        convention: ConventionArg,
    },
    /// Lift of a voltage base file (`voltagebase ORDER Q`, then `E|A u v g`).
    Lift {
        base: PathBuf,
        /// Reduce the voltages into Z_q instead of the file's group.
        #[arg(long)]
        q: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ConventionArg {
    Shift,
    Reflect,
}

impl From<ConventionArg> for CdrmConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Shift => CdrmConvention::Shift,
            ConventionArg::Reflect => CdrmConvention::Reflect,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum SearchCommand {
    /// Exhaustive search over even orders from n-max down.
    Exhaustive {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n_max: usize,
        /// Allow missing edges or arcs and in-degree other than 1.
        #[arg(long)]
        general: bool,
        /// Candidate cap per order.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Voltage-lift search over Z_q.
    Lift {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = TemplateArg::Four)]
        template: TemplateArg,
        /// Base file for `--template fixed`.
        #[arg(long, required_if_eq("template", "fixed"))]
        base: Option<PathBuf>,
        /// Group orders: `5`, `5,7,9` or `4..12` (inclusive).
        #[arg(long)]
        q: String,
        #[arg(long)]
        budget: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Best chordal double ring on 2m vertices.
    CdrmScan {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TemplateArg {
    Two,
    Four,
    Fixed,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SpectrumTarget {
    Bdm5,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VerifySuite {
    BdmDiameter,
    Automorphisms,
    Tables34,
    CrmTable6,
}

/// Text for standard output and whether the command succeeded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn io_err(path: &std::path::Path, e: std::io::Error) -> Error {
    Error::BadParams(format!("{}: {e}", path.display()))
}

fn read(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| io_err(path, e))
}

/// Writes to `out` if given and returns a short note, otherwise returns `text`.
fn emit(text: String, out: Option<&PathBuf>) -> Result<String> {
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| io_err(path, e))?;
            Ok(format!("wrote {}\n", path.display()))
        }
        None => Ok(text),
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Bounds { k, r, z } => bounds(*k, *r, *z).map(Output::ok),
        Command::Construct { family, output } => {
            let g = construct(family)?;
            emit(render(&g, output.format.into()), output.out.as_ref()).map(Output::ok)
        }
        Command::Analyze { path } => analyze(&parse_any(&read(path)?)?).map(Output::ok),
        Command::Search { kind } => search(kind).map(Output::ok),
        Command::Spectrum { which: SpectrumTarget::Bdm5 } => spectrum_bdm5().map(Output::ok),
        Command::Table { which } => emit_table(if which == "1" { 1 } else { 6 }).map(Output::ok),
        Command::Verify { suite } => {
            let items = verify(*suite)?;
            let mut text = String::new();
            for (name, pass) in &items {
                let _ = writeln!(text, "{} {name}", if *pass { "PASS" } else { "FAIL" });
            }
            let failed = items.iter().filter(|(_, p)| !p).count();
            let _ = writeln!(text, "{} passed, {failed} failed", items.len() - failed);
            Ok(Output {
                text,
                ok: failed == 0,
            })
        }
    }
}

fn bounds(k: u32, r: u64, z: u64) -> Result<String> {
    if (r, z) != (1, 1) {
        return Ok(format!("k {k} r {r} z {z}\nmoore {}\n", moore_bipartite(r, z, k)?));
    }
    let b = bounds_report(k)?;
    Ok(format!(
        "k {k} r 1 z 1\nmoore {}\nimproved {}\ncrm_upper {}\n",
        b.moore, b.improved, b.crm_upper
    ))
}

pub fn construct(family: &Family) -> Result<MixedGraph> {
    match family {
        Family::Bdm { m: Some(m), .. } => bdm(*m),
        Family::Bdm { n: Some(n), .. } => Ok(bdm_canonical(*n)?.1),
        Family::Bdm { .. } => Err(Error::BadParams("bdm needs --m or --n".into())),
        Family::BdmStar { n } => bdm_star(canonical_m(*n)?),
        Family::Bd { m } => bd_digraph(*m),
        Family::Crm { k: Some(k), .. } => Ok(crm_optimal(*k)?.build()),
        Family::Crm {
            n: Some(n),
            c: Some(c),
            ..
        } => crm(*n, *c),
        Family::Crm { .. } => Err(Error::BadParams("crm needs --n and --c, or --k".into())),
        Family::Cdrm { m, c, convention } => cdrm(*m, *c, (*convention).into()),
        Family::Lift { base, q } => {
            let mut b = VoltageBaseGraph::parse(&read(base)?)?;
            if let Some(q) = q {
                b = b.with_group_order(*q)?;
            }
            lift(&b)
        }
    }
}

fn analyze(g: &MixedGraph) -> Result<String> {
    let p = validate_and_profile(g)?;
    let ecc = eccentricity_report(g);
    let mut out = String::new();
    let _ = writeln!(out, "order {}", g.n());
    let _ = writeln!(out, "edges {}", g.edge_count());
    let _ = writeln!(out, "arcs {}", g.arc_count());
    let _ = writeln!(out, "max_undirected_degree {}", p.max_undirected());
    let _ = writeln!(out, "max_out_degree {}", p.max_out());
    let _ = writeln!(
        out,
        "max_in_degree {}",
        p.in_degree.iter().max().copied().unwrap_or(0)
    );
    let _ = writeln!(out, "totally_regular {}", p.totally_regular(1, 1));
    let _ = writeln!(out, "bipartite {}", bipartition(g).is_some());
    let _ = writeln!(out, "diameter {}", ecc.diameter);
    let _ = writeln!(out, "out_radius {}", ecc.out_radius);
    let _ = writeln!(out, "in_radius {}", ecc.in_radius);
    Ok(out)
}

/// Parses `5`, `5,7,9` or `4..12` (inclusive).
pub fn parse_q_range(s: &str) -> Result<Vec<u64>> {
    let bad = || Error::BadParams(format!("cannot read group orders from `{s}`"));
    if let Some((a, b)) = s.split_once("..") {
        let a: u64 = a.trim().parse().map_err(|_| bad())?;
        let b: u64 = b.trim().parse().map_err(|_| bad())?;
        return Ok((a..=b).collect());
    }
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| bad()))
        .collect()
}

fn search(cmd: &SearchCommand) -> Result<String> {
    match cmd {
        SearchCommand::Exhaustive {
            k,
            n_max,
            general,
            budget,
            out,
        } => {
            let r = exhaustive_max_order(*k, *n_max, !general, budget.unwrap_or(u64::MAX))?;
            emit(r.to_text(), out.as_ref())
        }
        SearchCommand::Lift {
            k,
            template,
            base,
            q,
            budget,
            seed,
            out,
        } => {
            let template = match (template, base) {
                (TemplateArg::Two, _) => LiftTemplate::TwoVertex,
                (TemplateArg::Four, _) => LiftTemplate::FourVertex,
                (TemplateArg::Fixed, Some(path)) => {
                    LiftTemplate::Fixed(VoltageBaseGraph::parse(&read(path)?)?)
                }
                (TemplateArg::Fixed, None) => {
                    return Err(Error::BadParams("--template fixed needs --base".into()))
                }
            };
            let r = lift_search(*k, &template, &parse_q_range(q)?, *budget, *seed)?;
            emit(r.to_text(), out.as_ref())
        }
        SearchCommand::CdrmScan { m } => {
            let s = cdrm_scan(*m)?;
            Ok(format!(
                "m {m}\norder {}\nc {}\nconvention {}\ndiameter {}\n",
                2 * m,
                s.c,
                s.convention,
                s.diameter
            ))
        }
    }
}

fn spectrum_bdm5() -> Result<String> {
    let rows = spectrum_by_root(&bdm5_polynomial_matrix())?;
    let mut out = String::new();
    for (r, row) in rows.iter().enumerate() {
        let vals: Vec<String> = row.iter().map(|&z| format_complex(z)).collect();
        let _ = writeln!(out, "r={r} {}", vals.join(" "));
    }
    Ok(out)
}

/// Table 1 (`which = 1`): k, Moore bound, improved bound and BDM order for
/// k = 3..16. Table 6 (`which = 6`): k, optimal CRM parameters, measured
/// diameter, CRM order bound and improved bound for k = 3..22.
pub fn emit_table(which: u32) -> Result<String> {
    let mut out = String::new();
    match which {
        1 => {
            let _ = writeln!(out, "{:>3} {:>6} {:>6} {:>5}", "k", "moore", "thm", "bdm");
            for k in 3..=16u32 {
                let bdm_order = if k % 2 == 0 && k >= 6 {
                    (4 * canonical_m(k / 2)?).to_string()
                } else {
                    "-".to_string()
                };
                let _ = writeln!(
                    out,
                    "{k:>3} {:>6} {:>6} {bdm_order:>5}",
                    moore_bipartite(1, 1, k)?,
                    improved_bound(k)?
                );
            }
        }
        6 => {
            let _ = writeln!(
                out,
                "{:>3} {:>5} {:>5} {:>4} {:>5} {:>6}",
                "k", "n", "c", "diam", "max", "thm"
            );
            for k in 3..=22u32 {
                let p = crm_optimal(k)?;
                let _ = writeln!(
                    out,
                    "{k:>3} {:>5} {:>5} {:>4} {:>5} {:>6}",
                    p.n,
                    p.c,
                    diameter(&p.build()).to_string(),
                    crm_upper(k),
                    improved_bound(k)?
                );
            }
        }
        other => return Err(Error::BadParams(format!("no table {other}"))),
    }
    Ok(out)
}

/// Named checks of one suite.
pub fn verify(suite: VerifySuite) -> Result<Vec<(String, bool)>> {
    let mut items = Vec::new();
    match suite {
        VerifySuite::BdmDiameter => {
            for n in 3..=8u32 {
                let (m, g) = bdm_canonical(n)?;
                let d = diameter(&g);
                items.push((
                    format!("BDM(2,{m}) order {} diameter {d} == {}", g.n(), 2 * n),
                    d == Distance::Finite(2 * n) && g.n() == 5 << (n - 1),
                ));
            }
            for n in 4..=7u32 {
                let m = canonical_m(n)?;
                let g = bdm_star(m)?;
                let regular = validate_and_profile(&g)?.totally_regular(1, 1);
                let d = diameter(&g);
                items.push((
                    format!("BDM*(2,{m}) totally regular, diameter {d} <= {}", 2 * n + 1),
                    regular && d <= Distance::Finite(2 * n + 1),
                ));
            }
        }
        VerifySuite::Automorphisms => {
            for n in 3..=6u32 {
                let m = canonical_m(n)?;
                let g = bdm(m)?;
                let p1 = automorphism_permutation(NamedAutomorphism::Phi1, m, n)?;
                let p2 = automorphism_permutation(NamedAutomorphism::Phi2, m, n)?;
                items.push((format!("Phi1 on BDM(2,{m})"), verify_automorphism(&g, &p1)?));
                items.push((format!("Phi2 on BDM(2,{m})"), verify_automorphism(&g, &p2)?));
                let involution = (0..4 * m).all(|v| p1[p1[v]] == v);
                items.push((format!("Phi1^2 = id on BDM(2,{m})"), involution));
                let order = permutation_order(&p2);
                items.push((format!("Phi2 has order {order} == 5 on BDM(2,{m})"), order == 5));
            }
        }
        VerifySuite::Tables34 => {
            for n_can in [6u32, 7] {
                let m = canonical_m(n_can)?;
                let g = bdm(m)?;
                let ok_v = (1..=n_can).all(|n| {
                    (0..m).all(|i| {
                        let start = BdmVertex::new(0, i, 1).index(m);
                        v_endpoint(n, i as i64, m).is_ok_and(|v| {
                            walk_pattern(&g, start, &pattern_alternating(n as usize))
                                == BTreeSet::from([v.index(m)])
                        })
                    })
                });
                items.push((format!("v(n) closed form, n=1..{n_can}, m={m}"), ok_v));
                let ok_u = (0..=n_can).all(|n| {
                    (0..m).all(|i| {
                        let start = BdmVertex::new(1, i, 1).index(m);
                        u_endpoint(n, i as i64, m).is_ok_and(|u| {
                            walk_pattern(&g, start, &pattern_alternating(n as usize))
                                == BTreeSet::from([u.index(m)])
                        })
                    })
                });
                items.push((format!("u(n) closed form, n=0..{n_can}, m={m}"), ok_u));
                let nc = n_can as usize;
                let same = |alpha: u8, long: Vec<_>, short: Vec<_>| {
                    (0..m).all(|i| {
                        let s = BdmVertex::new(alpha, i, 1).index(m);
                        walk_pattern(&g, s, &long) == walk_pattern(&g, s, &short)
                    })
                };
                items.push((
                    format!("v({nc}) = v'({}) mod {m}", nc - 1),
                    same(0, pattern_alternating(nc), pattern_v_shortcut(nc - 1)),
                ));
                items.push((
                    format!("u({nc}) = u'({}) mod {m}", nc - 3),
                    same(1, pattern_alternating(nc), pattern_u_shortcut(nc - 3)),
                ));
            }
        }
        VerifySuite::CrmTable6 => {
            for k in 3..=22u32 {
                let p = crm_optimal(k)?;
                let d = diameter(&p.build());
                items.push((
                    format!("CRM({},{}) case {} diameter {d} == {k}", p.n, p.c, p.case),
                    d == Distance::Finite(k) && p.n as u64 <= crm_upper(k),
                ));
            }
        }
    }
    Ok(items)
}

fn permutation_order(p: &[usize]) -> usize {
    let mut q: Vec<usize> = p.to_vec();
    let mut order = 1;
    while q.iter().enumerate().any(|(i, &x)| i != x) {
        q = q.iter().map(|&x| p[x]).collect();
        order += 1;
    }
    order
}
