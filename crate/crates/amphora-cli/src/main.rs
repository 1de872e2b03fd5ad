//! `amphora`: command-line driver for the split-graph block calculus.
//!
//! Subcommands enumerate the distinct-part majorization lattices, list and
//! label S-blocks, classify sequences and block literals, compute meets and
//! joins together with their case-table entry, print the amphora fence
//! W(n), expand the five-cycle tail families, render Hasse diagrams as DOT,
//! and run the verification battery.
//!
//! Each invocation prints a single JSON document; `--pretty` switches to a
//! human-readable rendering. Exit codes: 0 success, 1 invalid input (the
//! message names the violated clause or flag), 2 verification failure.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use amphora_core::dot::{dis_dot, ng3_dot, sblock_dot};
use amphora_core::{
    block_lattice, block_to_sequence, build_ng3_poset, build_sblock_poset, build_w, classify,
    enumerate_dis, enumerate_dis_k, make_block, run_all, sequence_to_block, Block, CaseLocation,
    Check, Classification, DisPoset, NgCell, Partition, TableCase, Verdict,
};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version ride on clap's error channel but are not
            // failures; everything else is bad input.
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let pretty = cli.pretty;
    match run(cli.command, pretty) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification { failed, total }) => {
            eprintln!("verification failed: {failed} of {total} suites reported counterexamples");
            ExitCode::from(2)
        }
    }
}

#[derive(Parser)]
#[command(
    name = "amphora",
    version,
    about = "Block calculus for split-graph degree sequences",
    disable_help_subcommand = true
)]
struct Cli {
    /// Print a human-readable rendering instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the distinct-part partitions of n with their cover relation.
    Dis(DisArgs),
    /// List the S-blocks of weight n, optionally with amphora labels.
    Sblock(SblockArgs),
    /// Classify a degree sequence (--pi) or a block literal (--block).
    Classify(ClassifyArgs),
    /// Meet, join, and case-table row for two S-blocks of common weight.
    Meetjoin(MeetjoinArgs),
    /// Print the amphora fence W(n) with per-class shapes.
    Amphoras(AmphorasArgs),
    /// Expand the five-cycle tail family NG3(n, k) and its image amphora.
    Ng3(Ng3Args),
    /// Render a Hasse diagram as DOT.
    Hasse(HasseArgs),
    /// Run the verification battery and report per-suite results.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct DisArgs {
    /// Weight of the partitions.
    #[arg(short = 'n', long = "n", value_name = "WEIGHT")]
    n: u32,
    /// Keep only partitions with exactly this many parts.
    #[arg(short = 'k', long = "k", value_name = "PARTS")]
    k: Option<usize>,
}

#[derive(Args)]
struct SblockArgs {
    /// Common side weight of the blocks.
    #[arg(short = 'n', long = "n", value_name = "WEIGHT")]
    n: u32,
    /// Add amphora kind, NG flags, and the threshold-cover flag per block.
    #[arg(long)]
    labels: bool,
}

#[derive(Args)]
#[command(group = ArgGroup::new("subject").required(true).multiple(false))]
struct ClassifyArgs {
    /// Degree sequence, comma-separated, e.g. 6,5,2,2,2,1,1,1.
    #[arg(long, value_name = "SEQ", group = "subject")]
    pi: Option<String>,
    /// Block literal `alpha|beta`, e.g. "6,4|7,3".
    #[arg(long, value_name = "BLOCK", group = "subject")]
    block: Option<String>,
}

#[derive(Args)]
struct MeetjoinArgs {
    /// Common weight of both operands.
    #[arg(short = 'n', long = "n", value_name = "WEIGHT")]
    n: u32,
    /// First operand, `alpha|beta`.
    #[arg(long, value_name = "BLOCK")]
    b1: String,
    /// Second operand, `alpha|beta`.
    #[arg(long, value_name = "BLOCK")]
    b2: String,
}

#[derive(Args)]
struct AmphorasArgs {
    /// Common side weight of the blocks.
    #[arg(short = 'n', long = "n", value_name = "WEIGHT")]
    n: u32,
}

#[derive(Args)]
struct Ng3Args {
    /// Core weight; the member blocks themselves weigh n+3 and n+7.
    #[arg(short = 'n', long = "n", value_name = "CORE_WEIGHT")]
    n: u32,
    /// Core length.
    #[arg(short = 'k', long = "k", value_name = "PARTS")]
    k: usize,
}

#[derive(ValueEnum, Clone, Copy)]
enum Target {
    Dis,
    Sblock,
    Ng3,
}

#[derive(Args)]
struct HasseArgs {
    /// Which poset to render.
    #[arg(long, value_enum)]
    target: Target,
    /// Weight (core weight for the ng3 target).
    #[arg(short = 'n', long = "n", value_name = "WEIGHT")]
    n: u32,
    /// Part count: optional for dis, required for ng3.
    #[arg(short = 'k', long = "k", value_name = "PARTS")]
    k: Option<usize>,
    /// Write the DOT text to this file instead of stdout.
    #[arg(long, value_name = "FILE")]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Weight ceiling for the partition-side sweeps.
    #[arg(long, default_value_t = 12, value_name = "N")]
    max_n: u32,
    /// Vertex ceiling for the exhaustive graph sweep (at most 7).
    #[arg(long, default_value_t = 6, value_name = "V")]
    graphs_max_v: usize,
}

/// Failures routed to a nonzero exit: bad input (exit 1, message names the
/// violated clause or flag) or a failed verification run (exit 2).
enum Failure {
    Invalid(String),
    Verification { failed: usize, total: usize },
}

fn invalid(flag: &str, err: impl std::fmt::Display) -> Failure {
    Failure::Invalid(format!("{flag}: {err}"))
}

fn require_weight(n: u32) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Invalid("-n: weight must be at least 1".into()));
    }
    Ok(())
}

fn json<T: Serialize>(out: &T) -> String {
    serde_json::to_string(out).expect("output types serialize")
}

fn plural(n: usize) -> &'static str {
    if n == 1 {
        ""
    } else {
        "s"
    }
}

fn run(cmd: Command, pretty: bool) -> Result<(), Failure> {
    match cmd {
        Command::Dis(a) => cmd_dis(a, pretty),
        Command::Sblock(a) => cmd_sblock(a, pretty),
        Command::Classify(a) => cmd_classify(a, pretty),
        Command::Meetjoin(a) => cmd_meetjoin(a, pretty),
        Command::Amphoras(a) => cmd_amphoras(a, pretty),
        Command::Ng3(a) => cmd_ng3(a, pretty),
        Command::Hasse(a) => cmd_hasse(a, pretty),
        Command::Verify(a) => cmd_verify(a, pretty),
    }
}

#[derive(Serialize)]
struct DisOut {
    n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    count: usize,
    elements: Vec<String>,
    /// Cover pairs as (upper, lower) indices into `elements`.
    covers: Vec<(usize, usize)>,
}

fn cmd_dis(a: DisArgs, pretty: bool) -> Result<(), Failure> {
    require_weight(a.n)?;
    let dis = match a.k {
        Some(k) => enumerate_dis_k(a.n, k),
        None => enumerate_dis(a.n),
    };
    let out = DisOut {
        n: a.n,
        k: a.k,
        count: dis.len(),
        elements: dis.elements().iter().map(Partition::to_string).collect(),
        covers: dis.covers().to_vec(),
    };
    if pretty {
        print!("{}", render_dis(&dis, a.n, a.k));
    } else {
        println!("{}", json(&out));
    }
    Ok(())
}

fn render_dis(dis: &DisPoset, n: u32, k: Option<usize>) -> String {
    let name = match k {
        Some(k) => format!("Dis_{k}({n})"),
        None => format!("Dis({n})"),
    };
    let mut s = String::new();
    let _ = writeln!(s, "{name}: {} element{}", dis.len(), plural(dis.len()));
    for (i, p) in dis.elements().iter().enumerate() {
        let _ = writeln!(s, "  {i:>3}  ({p})");
    }
    let _ = writeln!(s, "covers (upper > lower): {}", dis.covers().len());
    for &(u, l) in dis.covers() {
        let _ = writeln!(s, "  ({}) > ({})", dis.elements()[u], dis.elements()[l]);
    }
    s
}

#[derive(Serialize)]
struct BlockRow {
    block: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ng1: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ng2: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    in_tc: Option<bool>,
}

#[derive(Serialize)]
struct SblockOut {
    n: u32,
    count: usize,
    elements: Vec<BlockRow>,
    /// Cover pairs as (upper, lower) indices into `elements`.
    covers: Vec<(usize, usize)>,
}

fn cmd_sblock(a: SblockArgs, pretty: bool) -> Result<(), Failure> {
    require_weight(a.n)?;
    let sp = build_sblock_poset(a.n).map_err(|e| invalid("-n", e))?;
    let poset = sp.poset();
    let elements = poset
        .elements()
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let label = a.labels.then(|| sp.label(i));
            BlockRow {
                block: b.to_string(),
                kind: label.map(|l| l.kind.to_string()),
                ng1: label.map(|l| l.ng1),
                ng2: label.map(|l| l.ng2),
                in_tc: label.map(|l| l.in_tc),
            }
        })
        .collect();
    let out = SblockOut {
        n: a.n,
        count: poset.len(),
        elements,
        covers: poset.covers().to_vec(),
    };
    if pretty {
        print!("{}", render_sblock(&out));
    } else {
        println!("{}", json(&out));
    }
    Ok(())
}

fn render_sblock(out: &SblockOut) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "S-Block({}): {} block{}",
        out.n,
        out.count,
        plural(out.count)
    );
    let width = out
        .elements
        .iter()
        .map(|r| r.block.len() + 2)
        .max()
        .unwrap_or(0);
    for (i, row) in out.elements.iter().enumerate() {
        let block = format!("[{}]", row.block);
        let mut flags = Vec::new();
        if row.ng1 == Some(true) {
            flags.push("ng1");
        }
        if row.ng2 == Some(true) {
            flags.push("ng2");
        }
        if row.in_tc == Some(true) {
            flags.push("tc");
        }
        let mut line = format!("  {i:>3}  {block:<width$}");
        if let Some(kind) = &row.kind {
            let _ = write!(line, "  {kind:<5}");
            if !flags.is_empty() {
                let _ = write!(line, " {}", flags.join(" "));
            }
        }
        let _ = writeln!(s, "{}", line.trim_end());
    }
    let _ = writeln!(s, "covers (upper > lower): {}", out.covers.len());
    for &(u, l) in &out.covers {
        let _ = writeln!(
            s,
            "  [{}] > [{}]",
            out.elements[u].block, out.elements[l].block
        );
    }
    s
}

#[derive(Serialize)]
struct ClassifyOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    pi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    block: Option<String>,
    alpha: String,
    beta: String,
    mark: usize,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    invalid_clause: Option<String>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    classification: Option<Classification>,
}

fn verdict_name(sblock: bool) -> &'static str {
    if sblock {
        "s-block"
    } else {
        "block-only"
    }
}

fn cmd_classify(a: ClassifyArgs, pretty: bool) -> Result<(), Failure> {
    let out = match (a.pi, a.block) {
        (Some(s), None) => {
            let pi: Partition = s.parse().map_err(|e| invalid("--pi", e))?;
            let pair = sequence_to_block(&pi);
            let (block, verdict, invalid_clause, classification) = match &pair.verdict {
                Verdict::Invalid(e) => (None, "invalid", Some(e.to_string()), None),
                v => {
                    let b = make_block(pair.alpha.clone(), pair.beta.clone())
                        .expect("verdict already certified the clauses");
                    let c = classify(&b);
                    (
                        Some(b.to_string()),
                        verdict_name(matches!(v, Verdict::SBlock)),
                        None,
                        Some(c),
                    )
                }
            };
            ClassifyOut {
                pi: Some(pi.to_string()),
                block,
                alpha: pair.alpha.to_string(),
                beta: pair.beta.to_string(),
                mark: pair.mark,
                verdict,
                invalid_clause,
                classification,
            }
        }
        (None, Some(s)) => {
            let b: Block = s.parse().map_err(|e| invalid("--block", e))?;
            let c = classify(&b);
            ClassifyOut {
                // Present exactly when the block is the decomposition of a
                // degree sequence; non-split blocks may have no preimage.
                pi: block_to_sequence(&b).ok().map(|p| p.to_string()),
                block: Some(b.to_string()),
                alpha: b.alpha().to_string(),
                beta: b.beta().to_string(),
                mark: b.beta().len() + 1,
                verdict: verdict_name(c.is_sblock),
                invalid_clause: None,
                classification: Some(c),
            }
        }
        _ => unreachable!("clap enforces exactly one subject"),
    };
    if pretty {
        print!("{}", render_classify(&out));
    } else {
        println!("{}", json(&out));
    }
    Ok(())
}

fn render_classify(out: &ClassifyOut) -> String {
    let mut s = String::new();
    if let Some(pi) = &out.pi {
        let _ = writeln!(s, "pi:      ({pi})");
    }
    if let Some(block) = &out.block {
        let _ = writeln!(s, "block:   [{block}]");
    }
    let _ = writeln!(s, "alpha:   ({})", out.alpha);
    let _ = writeln!(s, "beta:    ({})", out.beta);
    let _ = writeln!(s, "mark:    {}", out.mark);
    let _ = writeln!(s, "verdict: {}", out.verdict);
    if let Some(clause) = &out.invalid_clause {
        let _ = writeln!(s, "violated clause: {clause}");
    }
    if let Some(c) = &out.classification {
        let rows: [(&str, bool); 9] = [
            ("s-block", c.is_sblock),
            ("threshold", c.is_threshold),
            ("balanced", c.is_balanced),
            ("unbalanced", c.is_unbalanced),
            ("ng1", c.is_ng1),
            ("ng2", c.is_ng2),
            ("ng3", c.is_ng3),
            ("pseudo-split", c.is_pseudo_split),
            ("threshold-covered", c.is_threshold_covered),
        ];
        let _ = writeln!(s, "weights: ({}, {})", c.n1, c.n2);
        for (name, value) in rows {
            let _ = writeln!(s, "  {name:<18} {}", if value { "yes" } else { "no" });
        }
    }
    s
}

#[derive(Serialize)]
struct CaseOut {
    row: &'static str,
    kinds: (String, String),
    meet_at: String,
    join_at: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    cells: Option<(&'static str, &'static str)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    meet_cell: Option<&'static str>,
    /// Present only when the refinement predicts a block join.
    #[serde(skip_serializing_if = "Option::is_none")]
    join_cell: Option<&'static str>,
}

#[derive(Serialize)]
struct MeetJoinOut {
    n: u32,
    b1: String,
    b2: String,
    meet: String,
    join: String,
    case: CaseOut,
}

fn loc_str(loc: CaseLocation) -> String {
    match loc {
        CaseLocation::Bottom => "bottom".into(),
        CaseLocation::Top => "top".into(),
        CaseLocation::In(kind) => kind.to_string(),
    }
}

fn cell_str(cell: NgCell) -> &'static str {
    match cell {
        NgCell::OneStar => "1*",
        NgCell::TwoStar => "2*",
        NgCell::Both => "1*2*",
    }
}

fn case_out(tc: &TableCase) -> CaseOut {
    CaseOut {
        row: tc.row,
        kinds: (tc.kinds.0.to_string(), tc.kinds.1.to_string()),
        meet_at: loc_str(tc.meet),
        join_at: loc_str(tc.join),
        cells: tc
            .refinement
            .map(|r| (cell_str(r.cells.0), cell_str(r.cells.1))),
        meet_cell: tc.refinement.map(|r| cell_str(r.meet_cell)),
        join_cell: tc.refinement.and_then(|r| r.join_cell).map(cell_str),
    }
}

fn check_operand(flag: &str, b: &Block, n: u32) -> Result<(), Failure> {
    if !b.is_sblock() {
        return Err(Failure::Invalid(format!(
            "{flag}: expected an S-block (equal side weights), got weights ({}, {})",
            b.n1(),
            b.n2()
        )));
    }
    if b.n1() != n {
        return Err(Failure::Invalid(format!(
            "{flag}: expected weight {n}, got {}",
            b.n1()
        )));
    }
    Ok(())
}

fn cmd_meetjoin(a: MeetjoinArgs, pretty: bool) -> Result<(), Failure> {
    require_weight(a.n)?;
    let lat = block_lattice(a.n).map_err(|e| invalid("-n", e))?;
    let b1: Block = a.b1.parse().map_err(|e| invalid("--b1", e))?;
    let b2: Block = a.b2.parse().map_err(|e| invalid("--b2", e))?;
    check_operand("--b1", &b1, a.n)?;
    check_operand("--b2", &b2, a.n)?;
    let meet = lat.meet(&b1, &b2).map_err(|e| invalid("--b1/--b2", e))?;
    let join = lat.join(&b1, &b2).map_err(|e| invalid("--b1/--b2", e))?;
    let tc = lat
        .table_case(&b1, &b2)
        .map_err(|e| invalid("--b1/--b2", e))?;
    let out = MeetJoinOut {
        n: a.n,
        b1: b1.to_string(),
        b2: b2.to_string(),
        meet: meet.to_string(),
        join: join.to_string(),
        case: case_out(&tc),
    };
    if pretty {
        print!("{}", render_meetjoin(&out));
    } else {
        println!("{}", json(&out));
    }
    Ok(())
}

fn render_meetjoin(out: &MeetJoinOut) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n:    {}", out.n);
    let _ = writeln!(s, "b1:   [{}]", out.b1);
    let _ = writeln!(s, "b2:   [{}]", out.b2);
    let _ = writeln!(
        s,
        "row:  {}  (kinds {}, {})",
        out.case.row, out.case.kinds.0, out.case.kinds.1
    );
    let _ = writeln!(s, "meet: {}  (lands at {})", out.meet, out.case.meet_at);
    let _ = writeln!(s, "join: {}  (lands at {})", out.join, out.case.join_at);
    if let Some((c1, c2)) = out.case.cells {
        let _ = writeln!(s, "cells: {c1}, {c2}");
        if let Some(mc) = out.case.meet_cell {
            let _ = writeln!(s, "  meet cell: {mc}");
        }
        match out.case.join_cell {
            Some(jc) => {
                let _ = writeln!(s, "  join cell: {jc}");
            }
            None => {
                let _ = writeln!(s, "  join cell: none (join is top)");
            }
        }
    }
    s
}

#[derive(Serialize)]
struct AmphoraNodeOut {
    name: String,
    size: usize,
    bottom: String,
    tops: Vec<String>,
}

#[derive(Serialize)]
struct AmphorasOut {
    n: u32,
    nodes: Vec<AmphoraNodeOut>,
    /// Cover pairs as (upper, lower) indices into `nodes`.
    covers: Vec<(usize, usize)>,
}

fn cmd_amphoras(a: AmphorasArgs, pretty: bool) -> Result<(), Failure> {
    require_weight(a.n)?;
    let sp = build_sblock_poset(a.n).map_err(|e| invalid("-n", e))?;
    let w = build_w(a.n).map_err(|e| invalid("-n", e))?;
    let shapes = sp.amphora_shapes().map_err(|e| invalid("-n", e))?;
    let poset = sp.poset();
    let nodes = w
        .elements()
        .iter()
        .map(|node| {
            let name = node.to_string();
            let (kind, shape) = shapes
                .iter()
                .find(|(k, _)| k.to_string() == name)
                .expect("every fence node names a nonempty class");
            AmphoraNodeOut {
                name,
                size: sp.members(*kind).len(),
                bottom: poset.element(shape.bottom).to_string(),
                tops: shape
                    .tops
                    .iter()
                    .map(|&t| poset.element(t).to_string())
                    .collect(),
            }
        })
        .collect();
    let out = AmphorasOut {
        n: a.n,
        nodes,
        covers: w.covers().to_vec(),
    };
    if pretty {
        print!("{}", render_amphoras(&out));
    } else {
        println!("{}", json(&out));
    }
    Ok(())
}

fn render_amphoras(out: &AmphorasOut) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "W({}): {} amphora class{}",
        out.n,
        out.nodes.len(),
        if out.nodes.len() == 1 { "" } else { "es" }
    );
    for node in &out.nodes {
        let _ = writeln!(
            s,
            "  {:<5} {} block{}, bottom [{}], {} top{}",
            node.name,
            node.size,
            plural(node.size),
            node.bottom,
            node.tops.len(),
            plural(node.tops.len())
        );
        for top in &node.tops {
            let _ = writeln!(s, "          top [{top}]");
        }
    }
    let _ = writeln!(s, "covers (upper > lower): {}", out.covers.len());
    for &(u, l) in &out.covers {
        let _ = writeln!(s, "  {} > {}", out.nodes[u].name, out.nodes[l].name);
    }
    s
}

#[derive(Serialize)]
struct Ng3ImageOut {
    n: u32,
    k: usize,
    /// Image blocks, aligned index-by-index with the source elements; the
    /// map drops both tail parts and lowers every core part by 4.
    elements: Vec<String>,
}

#[derive(Serialize)]
struct Ng3Out {
    n: u32,
    k: usize,
    count: usize,
    elements: Vec<String>,
    /// Cover pairs as (upper, lower) indices into `elements`.
    covers: Vec<(usize, usize)>,
    image: Ng3ImageOut,
}

/// Order isomorphism onto the unbalanced amphora of core parameters: strip
/// the two tail parts from each side and lower the surviving parts by 4.
fn ng3_image(b: &Block) -> Block {
    let strip = |p: &Partition| {
        let parts = p.parts();
        let core: Vec<u32> = parts[..parts.len() - 2].iter().map(|x| x - 4).collect();
        Partition::new(core).expect("core parts stay positive and distinct after the shift")
    };
    make_block(strip(b.alpha()), strip(b.beta())).expect("the stripped pair is again a block")
}

fn cmd_ng3(a: Ng3Args, pretty: bool) -> Result<(), Failure> {
    if a.k == 0 {
        return Err(Failure::Invalid(
            "-k: core length must be at least 1".into(),
        ));
    }
    let ng3 = build_ng3_poset(a.n, a.k).map_err(|e| invalid("-n/-k", e))?;
    let poset = ng3.poset();
    let out = Ng3Out {
        n: a.n,
        k: a.k,
        count: poset.len(),
        elements: poset.elements().iter().map(Block::to_string).collect(),
        covers: poset.covers().to_vec(),
        image: Ng3ImageOut {
            n: a.n - 4 * a.k as u32,
            k: a.k,
            elements: poset
                .elements()
                .iter()
                .map(|b| ng3_image(b).to_string())
                .collect(),
        },
    };
    if pretty {
        print!("{}", render_ng3(&out));
    } else {
        println!("{}", json(&out));
    }
    Ok(())
}

fn render_ng3(out: &Ng3Out) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "NG3({}, {}): {} block{} of weights ({}, {}), image A({}, {})",
        out.n,
        out.k,
        out.count,
        plural(out.count),
        out.n + 3,
        out.n + 7,
        out.image.n,
        out.image.k
    );
    let width = out.elements.iter().map(|e| e.len() + 2).max().unwrap_or(0);
    for (i, (el, im)) in out.elements.iter().zip(&out.image.elements).enumerate() {
        let block = format!("[{el}]");
        let _ = writeln!(s, "  {i:>3}  {block:<width$}  ->  [{im}]");
    }
    let _ = writeln!(s, "covers (upper > lower): {}", out.covers.len());
    for &(u, l) in &out.covers {
        let _ = writeln!(s, "  [{}] > [{}]", out.elements[u], out.elements[l]);
    }
    s
}

#[derive(Serialize)]
struct HasseOut {
    target: &'static str,
    n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    path: String,
    bytes: usize,
}

fn cmd_hasse(a: HasseArgs, pretty: bool) -> Result<(), Failure> {
    require_weight(a.n)?;
    let (target, dot_text) = match a.target {
        Target::Dis => {
            let dis = match a.k {
                Some(k) => enumerate_dis_k(a.n, k),
                None => enumerate_dis(a.n),
            };
            ("dis", dis_dot(&dis))
        }
        Target::Sblock => {
            if a.k.is_some() {
                return Err(Failure::Invalid(
                    "-k: the sblock target takes no part count".into(),
                ));
            }
            let sp = build_sblock_poset(a.n).map_err(|e| invalid("-n", e))?;
            ("sblock", sblock_dot(&sp))
        }
        Target::Ng3 => {
            let k = a
                .k
                .ok_or_else(|| Failure::Invalid("--target ng3 requires -k (core length)".into()))?;
            if k == 0 {
                return Err(Failure::Invalid(
                    "-k: core length must be at least 1".into(),
                ));
            }
            let ng3 = build_ng3_poset(a.n, k).map_err(|e| invalid("-n/-k", e))?;
            ("ng3", ng3_dot(&ng3))
        }
    };
    match a.dot {
        Some(path) => {
            fs::write(&path, dot_text.as_bytes())
                .map_err(|e| invalid(&format!("--dot {}", path.display()), e))?;
            let out = HasseOut {
                target,
                n: a.n,
                k: a.k,
                path: path.display().to_string(),
                bytes: dot_text.len(),
            };
            if pretty {
                println!("wrote {} ({} bytes)", out.path, out.bytes);
            } else {
                println!("{}", json(&out));
            }
        }
        // Raw DOT on stdout in both modes: the text is the deliverable.
        None => print!("{dot_text}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyOut {
    max_n: u32,
    graphs_max_v: usize,
    pass: bool,
    suites: Vec<Check>,
}

fn cmd_verify(a: VerifyArgs, pretty: bool) -> Result<(), Failure> {
    if a.max_n == 0 {
        return Err(Failure::Invalid("--max-n must be at least 1".into()));
    }
    if !(1..=7).contains(&a.graphs_max_v) {
        return Err(Failure::Invalid(
            "--graphs-max-v: the exhaustive graph sweep handles 1 through 7 vertices".into(),
        ));
    }
    let suites = run_all(a.max_n, a.graphs_max_v);
    let total = suites.len();
    let failed = suites.iter().filter(|c| !c.pass).count();
    let out = VerifyOut {
        max_n: a.max_n,
        graphs_max_v: a.graphs_max_v,
        pass: failed == 0,
        suites,
    };
    if pretty {
        print!("{}", render_verify(&out));
    } else {
        println!("{}", json(&out));
    }
    if failed > 0 {
        return Err(Failure::Verification { failed, total });
    }
    Ok(())
}

fn render_verify(out: &VerifyOut) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "verification battery: max_n = {}, graphs_max_v = {}",
        out.max_n, out.graphs_max_v
    );
    let width = out.suites.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for check in &out.suites {
        let status = if check.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            s,
            "{status}  {:<width$}  {:>12} checked  {}",
            check.name, check.checked, check.scope
        );
        for cx in &check.counterexamples {
            let _ = writeln!(s, "      counterexample: {cx}");
        }
    }
    let failed = out.suites.iter().filter(|c| !c.pass).count();
    let _ = writeln!(
        s,
        "{} suites, {} passed, {} failed",
        out.suites.len(),
        out.suites.len() - failed,
        failed
    );
    s
}
