//! One function per verb. Each returns the text to print and the exit code.

use crate::{parse, Cli, Command, SearchArgs, ShapeArgs, SweepArgs};
use anyhow::{bail, Context, Result};
use dissect_core::exactnum::AngleMode;
use dissect_core::geometry::Prototile;
use dissect_core::hgraph::{
    angle_pattern_check, build_hgraph, degree_balance, pairing_conjecture_check, parity_theorem_check, pattern_of,
    undirected_cycle_parity,
};
use dissect_core::incidence::{build_incidence, check_linear_identity, check_ratio_identity, counting_summary, six_gon_obstruction, LinearIdentity};
use dissect_core::search::{enumerate, sweep, RegionRule, SearchConfig, SweepStatus};
use dissect_core::segments::{
    area_constraint_check, boundary_identified_relations, extract_maximal_segments, odd_n_obstruction_report,
    scan_special_segments, solve_x, SolveX, Theta,
};
use dissect_core::tiling::{load, render_svg, save, validate, Annotations, TilingDocument, Tiling};
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt::Write;
use std::fs;
use std::path::Path;

pub const OK: u8 = 0;
pub const VIOLATED: u8 = 2;
pub const NOT_EXHAUSTED: u8 = 3;

pub struct Outcome {
    pub code: u8,
    pub text: String,
}

pub fn set_threads(n: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = n;
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn read_tiling(path: &Path) -> Result<Tiling> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    load(&bytes).with_context(|| format!("loading {}", path.display()))
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Validate { file } => validate_cmd(&read_tiling(file)?, cli.json),
        Command::Analyze { file, q } => analyze(&read_tiling(file)?, *q, cli.json),
        Command::Hgraph { file } => hgraph(&read_tiling(file)?, cli.json),
        Command::Segments { file } => segments(&read_tiling(file)?, cli.json),
        Command::Search(args) => search(args, cli.json),
        Command::Render { file, out, hgraph, segments, patterns } => {
            render(&read_tiling(file)?, out.as_deref(), *hgraph, *segments, *patterns)
        }
        Command::Sweep(args) => sweep_cmd(args, cli.json),
    }
}

fn validate_cmd(t: &Tiling, as_json: bool) -> Result<Outcome> {
    let r = validate(t);
    let code = if r.valid { OK } else { VIOLATED };
    let text = if as_json {
        to_json(&r)
    } else {
        let mut s = format!("{}\n", if r.valid { "valid" } else { "invalid" });
        for f in &r.failures {
            writeln!(s, "  {}", f.detail)?;
        }
        s
    };
    Ok(Outcome { code, text })
}

fn analyze(t: &Tiling, q: Option<i64>, as_json: bool) -> Result<Outcome> {
    let inc = match build_incidence(t) {
        Ok(i) => i,
        Err(e) => return Ok(Outcome { code: VIOLATED, text: format!("invalid tiling: {e}\n") }),
    };
    let q = q.unwrap_or(t.prototile().vertex_count() as i64);
    let summary = match counting_summary(&inc, q, t.len() as i64) {
        Ok(s) => s,
        Err(e) => return Ok(Outcome { code: VIOLATED, text: format!("census failed: {e}\n") }),
    };
    let ratio = check_ratio_identity(&summary);
    let linear = check_linear_identity(&summary);
    let holds = ratio && linear == LinearIdentity::Holds;
    let bound = six_gon_obstruction(q).ok();
    let text = if as_json {
        to_json(&json!({
            "summary": summary,
            "ratioIdentity": ratio,
            "linearIdentity": linear,
            "sixGonBound": bound,
            "vertices": inc,
        }))
    } else {
        let s = &summary;
        let mut out = format!(
            "N={} q={} |F|={} |H|={} F={} H={} hbar={} Delta={}\n",
            s.n, s.q, s.card_f, s.card_h, s.f, s.h, s.hbar, s.delta
        );
        writeln!(out, "ratio identity: {}", if ratio { "holds" } else { "fails" })?;
        match linear {
            LinearIdentity::Holds => writeln!(out, "linear identity: holds")?,
            LinearIdentity::Violation { lhs } => writeln!(out, "linear identity: fails (lhs = {lhs})")?,
        }
        out
    };
    Ok(Outcome { code: if holds { OK } else { VIOLATED }, text })
}

fn hgraph(t: &Tiling, as_json: bool) -> Result<Outcome> {
    let g = build_hgraph(t)?;
    let inc = match build_incidence(t) {
        Ok(i) => i,
        Err(e) => return Ok(Outcome { code: VIOLATED, text: format!("invalid tiling: {e}\n") }),
    };
    let balance = degree_balance(&g);
    let patterns = angle_pattern_check(&g, &inc);
    let pairing = pairing_conjecture_check(&g);
    let quarter = t.angle_mode() == AngleMode::BoundAlpha { p: 1, q: 4 };
    let (parity, even): (Value, bool) = if quarter {
        let u = undirected_cycle_parity(t)?;
        let even = u.even();
        (serde_json::to_value(&u)?, even)
    } else {
        match parity_theorem_check(t) {
            Ok(r) => {
                let even = r.n_even && r.cycles.iter().all(|c| c.certificate.holds());
                (serde_json::to_value(&r)?, even)
            }
            Err(e) => (json!({ "error": e.to_string() }), false),
        }
    };
    let holds = balance.balanced && even;
    let text = if as_json {
        to_json(&json!({
            "edges": g.edges,
            "components": g.component_count(),
            "degreeBalance": balance,
            "patternCheck": patterns,
            "pairingConjecture": pairing,
            "parity": parity,
        }))
    } else {
        let mut s = format!("{} edges, {} components\n", g.edges.len(), g.component_count());
        writeln!(s, "degree balance: {}", if balance.balanced { "balanced" } else { "unbalanced" })?;
        writeln!(s, "angle patterns: {}", if patterns.eulerian { "all allowed" } else { "offenders found" })?;
        writeln!(s, "hypotenuses paired: {pairing}")?;
        writeln!(s, "parity: {}", if even { "certified even" } else { "not certified" })?;
        s
    };
    Ok(Outcome { code: if holds { OK } else { VIOLATED }, text })
}

fn segments(t: &Tiling, as_json: bool) -> Result<Outcome> {
    let segs = extract_maximal_segments(t);
    let relations = boundary_identified_relations(t).ok();
    let solved = relations.as_ref().map(|r| solve_x(&r.iter().map(|l| l.relation).collect::<Vec<_>>()));
    let area = area_constraint_check(t).map_err(|e| e.to_string());
    let special = scan_special_segments(t);
    let chain = odd_n_obstruction_report(t).ok();
    let alpha_heads = special.iter().filter(|s| s.head.theta == Theta::Alpha).count();
    let contradiction = matches!(solved, Some(SolveX::Contradiction { .. }));
    let code = if alpha_heads > 0 || contradiction { VIOLATED } else { OK };
    let text = if as_json {
        let area = match &area {
            Ok(a) => serde_json::to_value(a)?,
            Err(e) => json!({ "error": e }),
        };
        to_json(&json!({
            "maximalSegments": segs,
            "relations": relations,
            "solveX": solved,
            "areaConstraint": area,
            "specialSegments": special,
            "chain": chain,
        }))
    } else {
        let mut s = format!("{} maximal segments\n", segs.len());
        match &solved {
            Some(SolveX::Solved { r, s: sv }) => writeln!(s, "x = {r} + {sv}·√3")?,
            Some(SolveX::AllDegenerate) => writeln!(s, "x undetermined: every relation has a + b = 0")?,
            Some(SolveX::Contradiction { first, second }) => writeln!(s, "relations {first} and {second} disagree")?,
            None => writeln!(s, "no side relations for this prototile")?,
        }
        match &area {
            Ok(a) => writeln!(s, "area constraint: {}, s > 0: {}", if a.holds() { "holds" } else { "fails" }, a.s_positive)?,
            Err(e) => writeln!(s, "area constraint: {e}")?,
        }
        writeln!(s, "{} special segments, {} with an α head", special.len(), alpha_heads)?;
        s
    };
    Ok(Outcome { code, text })
}

fn prototile(shape: &ShapeArgs) -> Result<Prototile> {
    match shape.prototile.as_str() {
        "trapezoid" => {
            let mode = parse::angle(&shape.angle)?;
            let d = parse::field_of(mode);
            let Some(x) = &shape.x else { bail!("--x is required for a trapezoid") };
            Ok(Prototile::trapezoid(parse::number(x, d)?, mode)?)
        }
        "rectangle" => {
            let (Some(w), Some(h)) = (&shape.w, &shape.h) else { bail!("--w and --h are required for a rectangle") };
            Ok(Prototile::rectangle(parse::number(w, shape.field)?, parse::number(h, shape.field)?)?)
        }
        other => bail!("unknown prototile {other:?}; expected trapezoid or rectangle"),
    }
}

fn search(args: &SearchArgs, as_json: bool) -> Result<Outcome> {
    let proto = prototile(&args.shape)?;
    let region = parse::region(&args.region, proto.radicand())?;
    let mut cfg = SearchConfig::new(proto, region, args.n);
    cfg.node_limit = args.shape.node_limit;
    cfg.dedup_symmetry = !args.shape.no_dedup;
    let r = enumerate(&cfg)?;
    let docs: Vec<TilingDocument> = r.tilings.iter().map(TilingDocument::from_tiling).collect();
    let summary = json!({
        "count": r.tilings.len(),
        "rawCount": r.raw_count,
        "nodesExplored": r.nodes_explored,
        "exhausted": r.exhausted,
    });
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (i, t) in r.tilings.iter().enumerate() {
            let path = dir.join(format!("tiling-{:03}.json", i + 1));
            fs::write(&path, save(t)).with_context(|| format!("writing {}", path.display()))?;
        }
        fs::write(dir.join("summary.json"), to_json(&summary))?;
    }
    let text = if as_json {
        let mut v = summary;
        v["tilings"] = serde_json::to_value(&docs)?;
        to_json(&v)
    } else {
        let state = if r.exhausted { "exhausted" } else { "not exhausted (node limit reached)" };
        format!("{} tilings, {state}\n{} nodes explored\n", r.tilings.len(), r.nodes_explored)
    };
    Ok(Outcome { code: if r.exhausted { OK } else { NOT_EXHAUSTED }, text })
}

fn sweep_cmd(args: &SweepArgs, as_json: bool) -> Result<Outcome> {
    let proto = prototile(&args.shape)?;
    let ns = parse::counts(&args.n)?;
    let rule = if args.region == "square" {
        RegionRule::Square
    } else {
        RegionRule::Fixed(parse::region(&args.region, proto.radicand())?)
    };
    let cells = sweep(&[proto], &ns, &rule, args.shape.node_limit)?;
    let complete = cells.iter().all(|c| !matches!(c.status, SweepStatus::Searched { exhausted: false, .. }));
    let text = if as_json {
        to_json(&cells)
    } else {
        let mut s = String::new();
        for c in &cells {
            match &c.status {
                SweepStatus::Skipped { reason } => writeln!(s, "N={}: skipped ({reason})", c.n)?,
                SweepStatus::Searched { count, nodes, exhausted, eulerian, pairing, .. } => {
                    write!(s, "N={}: {count} tilings, {nodes} nodes{}", c.n, if *exhausted { "" } else { ", not exhausted" })?;
                    if let (Some(e), Some(p)) = (eulerian, pairing) {
                        write!(s, ", eulerian {e}, paired {p}")?;
                    }
                    s.push('\n');
                }
            }
        }
        s
    };
    Ok(Outcome { code: if complete { OK } else { NOT_EXHAUSTED }, text })
}

fn render(t: &Tiling, out: Option<&Path>, hgraph: bool, segments: bool, patterns: bool) -> Result<Outcome> {
    let mut ann = Annotations::default();
    if hgraph {
        let g = build_hgraph(t)?;
        ann.hgraph_edges = Some(g.edges.iter().map(|e| (e.origin.clone(), e.terminus.clone())).collect());
    }
    if segments {
        ann.maximal_segments = Some(extract_maximal_segments(t).into_iter().map(|m| (m.u, m.v)).collect());
    }
    if patterns {
        let inc = build_incidence(t)?;
        ann.vertex_patterns = Some(
            inc.iter()
                .map(|v| (v.w.clone(), pattern_of(v).iter().map(|p| p.label()).collect::<Vec<_>>().join(",")))
                .collect(),
        );
    }
    let svg = render_svg(t, &ann);
    match out {
        Some(path) => {
            fs::write(path, &svg).with_context(|| format!("writing {}", path.display()))?;
            Ok(Outcome { code: OK, text: String::new() })
        }
        None => Ok(Outcome { code: OK, text: String::from_utf8(svg)? }),
    }
}
