//! Command-line front end. `run` parses arguments, dispatches, and returns
//! the process exit code: 0 on success, 1 when a check fails (failures go
//! to stderr), 2 on usage or configuration errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bruhat::find_distinguished;
use crate::error::{Error, Result};
use crate::hasse;
use crate::oracle::{self, FqMatrix, Perm};
use crate::orbit::{dual_filtration_match, OrbitPoset, Side};
use crate::parabolic::DoubleCosetTable;
use crate::root_system::{CartanKind, Root, RootSystem, SimpleSubset};
use crate::verify::{self, SUITES};
use crate::weyl::{ElemId, WeylGroup, Word, DEFAULT_MAX_GROUP};

/// Overrides the element cap for Weyl group enumeration.
pub const MAX_GROUP_ENV: &str = "BRUHATKIT_MAX_GROUP";

#[derive(Parser, Debug)]
#[command(name = "bruhatkit", version, about = "Weyl groups, Bruhat order and parabolic double cosets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GroupArgs {
    /// Cartan type: A, B, C, D, G2, F4 or BC.
    #[arg(long = "type")]
    kind: String,
    #[arg(long)]
    rank: usize,
}

#[derive(Args, Debug, Clone, Default)]
struct SubsetArgs {
    /// Simple roots of P, 1-based, comma-separated.
    #[arg(long = "S", default_value = "")]
    s: String,
    /// Simple roots of Q, 1-based, comma-separated.
    #[arg(long = "T", default_value = "")]
    t: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Simple, positive and non-divisible roots.
    Roots {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        json: bool,
    },
    /// Weyl group enumeration.
    Weyl {
        #[command(subcommand)]
        cmd: WeylCmd,
    },
    /// Bruhat order queries.
    Bruhat {
        #[command(subcommand)]
        cmd: BruhatCmd,
    },
    /// Minimal double-coset representatives W_{S,T} with their Ω images.
    Dcosets {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        subsets: SubsetArgs,
        #[arg(long)]
        json: bool,
    },
    /// Ω_{S,T}(u) for one representative, or the whole table.
    Omega {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        subsets: SubsetArgs,
        /// A word for u; omit to list every representative.
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Orbit closure poset on one side.
    Orbits {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        subsets: SubsetArgs,
        /// plus (P\G/Q) or minus (P\G/Q⁻).
        #[arg(long, default_value = "plus")]
        side: String,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare the dual filtration with the opposite-side filtration.
    Match {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        subsets: SubsetArgs,
        /// Every pair (S,T) instead of the one given.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
    /// The GL_n(F_q) oracle.
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
    /// Run verification suites over a whole group.
    Verify {
        /// A suite name, or `all`.
        suite: String,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum WeylCmd {
    Enumerate {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum BruhatCmd {
    /// A distinguished subexpression of a reduced word with a given endpoint.
    Check {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        word: String,
        /// A word for the target element.
        #[arg(long)]
        target: String,
        #[arg(long)]
        json: bool,
    },
    /// The full order, as a 0/1 matrix or a Hasse diagram.
    Matrix {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u8,
        /// Restrict the parabolic part of the report to this (S,T).
        #[arg(long = "S")]
        s: Option<String>,
        #[arg(long = "T")]
        t: Option<String>,
        #[arg(long)]
        json: bool,
    },
    Witness {
        #[arg(long)]
        n: usize,
        /// One-line notation, e.g. 2,3,1.
        #[arg(long)]
        w: String,
        #[arg(long)]
        wprime: String,
        #[arg(long)]
        q: u8,
    },
}

/// What a command produced: text for stdout, and failures for stderr.
#[derive(Default)]
struct Outcome {
    out: String,
    failures: Vec<String>,
}

impl Outcome {
    fn text(out: String) -> Self {
        Outcome { out, failures: Vec::new() }
    }
}

/// Runs the CLI against the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.out.as_bytes());
            if outcome.failures.is_empty() {
                0
            } else {
                for f in &outcome.failures {
                    let _ = writeln!(err, "FAIL {f}");
                }
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::NotComparable { .. } => 1,
                _ => 2,
            }
        }
    }
}

fn max_group() -> Result<usize> {
    match std::env::var(MAX_GROUP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Error::config(format!("{MAX_GROUP_ENV}={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_GROUP),
    }
}

impl GroupArgs {
    fn system(&self) -> Result<RootSystem> {
        let kind: CartanKind = self.kind.parse()?;
        RootSystem::build(kind, self.rank)
    }

    fn group(&self) -> Result<WeylGroup> {
        WeylGroup::enumerate_with_cap(self.system()?, max_group()?)
    }
}

impl SubsetArgs {
    fn parse(&self, rank: usize) -> Result<(SimpleSubset, SimpleSubset)> {
        Ok((SimpleSubset::parse(&self.s, rank)?, SimpleSubset::parse(&self.t, rank)?))
    }
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Roots { group, json } => roots(&group, json),
        Command::Weyl { cmd: WeylCmd::Enumerate { group, json } } => weyl_enumerate(&group, json),
        Command::Bruhat { cmd: BruhatCmd::Check { group, word, target, json } } => {
            bruhat_check(&group, &word, &target, json)
        }
        Command::Bruhat { cmd: BruhatCmd::Matrix { group, dot, json } } => bruhat_matrix(&group, dot, json),
        Command::Dcosets { group, subsets, json } => dcosets(&group, &subsets, json),
        Command::Omega { group, subsets, word, json } => omega(&group, &subsets, word.as_deref(), json),
        Command::Orbits { group, subsets, side, dot, json } => orbits(&group, &subsets, &side, dot, json),
        Command::Match { group, subsets, all, json } => matching(&group, &subsets, all, json),
        Command::Oracle { cmd: OracleCmd::Verify { n, q, s, t, json } } => {
            oracle_verify(n, q, s.as_deref(), t.as_deref(), json)
        }
        Command::Oracle { cmd: OracleCmd::Witness { n, w, wprime, q } } => oracle_witness(n, &w, &wprime, q),
        Command::Verify { suite, group, json } => run_verify(&suite, &group, json),
    }
}

/// Pretty JSON with sorted keys, so parsing and re-emitting is the identity.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v: Value = serde_json::to_value(value).map_err(|e| Error::domain(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| Error::domain(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn coords(rs: &RootSystem, roots: &[Root]) -> Vec<Vec<i32>> {
    roots.iter().map(|r| rs.coords(r)).collect()
}

fn roots(args: &GroupArgs, json: bool) -> Result<Outcome> {
    let rs = args.system()?;
    let ty = rs.cartan_type();
    if json {
        let v = json!({
            "type": ty.kind().to_string(),
            "rank": rs.rank(),
            "simple": coords(&rs, rs.simple_roots()),
            "positive": coords(&rs, rs.positive_roots()),
            "nondivisible": coords(&rs, rs.nondivisible_roots()),
        });
        return Ok(Outcome::text(to_canonical_json(&v)?));
    }
    let mut s = String::new();
    writeln!(s, "{ty}: {} roots, {} positive, {} non-divisible", rs.roots().len(), rs.positive_roots().len(), rs.nondivisible_roots().len()).unwrap();
    for r in rs.positive_roots() {
        let tag = if rs.nondivisible_roots().contains(r) { "" } else { "  (divisible)" };
        writeln!(s, "  {:?}  height {}{tag}", rs.coords(r), r.height()).unwrap();
    }
    Ok(Outcome::text(s))
}

fn weyl_enumerate(args: &GroupArgs, json: bool) -> Result<Outcome> {
    let g = args.group()?;
    if json {
        let rows: Vec<Value> = g
            .ids()
            .map(|w| json!({"element_id": w.0, "canonical_word": g.word(w).to_string(), "length": g.length(w)}))
            .collect();
        return Ok(Outcome::text(to_canonical_json(&rows)?));
    }
    let mut s = String::new();
    writeln!(s, "W({}) has {} elements", g.cartan_type(), g.len()).unwrap();
    for w in g.ids() {
        writeln!(s, "{:>5}  l={:<3} {}", w.0, g.length(w), g.format(w)).unwrap();
    }
    Ok(Outcome::text(s))
}

fn parse_elem(g: &WeylGroup, word: &str) -> Result<ElemId> {
    g.evaluate(&Word::parse(word, g.rank())?)
}

fn bruhat_check(args: &GroupArgs, word: &str, target: &str, json: bool) -> Result<Outcome> {
    let g = args.group()?;
    let word = Word::parse(word, g.rank())?;
    let target = parse_elem(&g, target)?;
    let sub = find_distinguished(&g, &word, target)?;
    let choices = sub.choices();
    if json {
        let stages: Vec<Value> = sub
            .stages()
            .iter()
            .enumerate()
            .map(|(k, &w)| {
                let letter = (k > 0).then(|| sub.letter(k) + 1);
                json!({"stage": k, "letter": letter, "applied": k > 0 && choices[k - 1], "element": g.word(w).to_string()})
            })
            .collect();
        let v = json!({"word": word.to_string(), "target": g.word(target).to_string(), "stages": stages});
        return Ok(Outcome::text(to_canonical_json(&v)?));
    }
    let mut s = String::new();
    writeln!(s, "distinguished subexpression of ({word}) ending at {}", g.format(target)).unwrap();
    for (k, &w) in sub.stages().iter().enumerate() {
        if k == 0 {
            writeln!(s, "  w0 = e").unwrap();
        } else {
            let verb = if choices[k - 1] { "apply" } else { "stay " };
            writeln!(s, "  w{k} = {:<12} {verb} s{}", g.format(w), sub.letter(k) + 1).unwrap();
        }
    }
    Ok(Outcome::text(s))
}

fn bruhat_matrix(args: &GroupArgs, dot: bool, json: bool) -> Result<Outcome> {
    let g = args.group()?;
    let n = g.len();
    let labels: Vec<String> = g.ids().map(|w| g.format(w)).collect();
    if dot {
        let edges = hasse::covers(n, |a, b| g.bruhat_leq(ElemId(a as u32), ElemId(b as u32)));
        return Ok(Outcome::text(hasse::to_dot(&format!("Bruhat order {}", g.cartan_type()), &labels, &edges)));
    }
    let rows: Vec<Vec<u8>> = g.ids().map(|a| g.ids().map(|b| g.bruhat_leq(a, b) as u8).collect()).collect();
    if json {
        let words: Vec<String> = g.ids().map(|w| g.word(w).to_string()).collect();
        return Ok(Outcome::text(to_canonical_json(&json!({"elements": words, "leq": rows}))?));
    }
    let mut s = String::new();
    writeln!(s, "row a, column b: 1 when a <= b").unwrap();
    for (a, row) in rows.iter().enumerate() {
        let bits: String = row.iter().map(|&x| if x == 1 { '1' } else { '.' }).collect();
        writeln!(s, "{bits}  {}", labels[a]).unwrap();
    }
    Ok(Outcome::text(s))
}

fn dcosets(args: &GroupArgs, subsets: &SubsetArgs, json: bool) -> Result<Outcome> {
    let g = args.group()?;
    let (s, t) = subsets.parse(g.rank())?;
    let table = DoubleCosetTable::build(&g, s, t)?;
    if json {
        let reps: Vec<Value> = table
            .reps()
            .iter()
            .zip(table.omega())
            .map(|(&u, &o)| json!({"word": g.word(u).to_string(), "length": g.length(u), "omega_word": g.word(o).to_string()}))
            .collect();
        let v = json!({"S": s.labels(), "T": t.labels(), "reps": reps});
        return Ok(Outcome::text(to_canonical_json(&v)?));
    }
    let mut out = String::new();
    writeln!(out, "W_(S,T) for S={s} T={t}: {} representatives", table.len()).unwrap();
    writeln!(out, "{:>4}  {:<16} {:>6} {:>7}  Ω(u) in W_(S,{})", "i", "u", "l(u)", "|coset|", table.theta_t()).unwrap();
    for (i, (&u, &o)) in table.reps().iter().zip(table.omega()).enumerate() {
        writeln!(out, "{:>4}  {:<16} {:>6} {:>7}  {}", i + 1, g.format(u), g.length(u), table.coset_sizes()[i], g.format(o)).unwrap();
    }
    Ok(Outcome::text(out))
}

fn omega(args: &GroupArgs, subsets: &SubsetArgs, word: Option<&str>, json: bool) -> Result<Outcome> {
    let g = args.group()?;
    let (s, t) = subsets.parse(g.rank())?;
    let reps: Vec<ElemId> = match word {
        Some(w) => vec![parse_elem(&g, w)?],
        None => DoubleCosetTable::build(&g, s, t)?.reps().to_vec(),
    };
    let mut pairs = Vec::with_capacity(reps.len());
    for u in reps {
        pairs.push((u, g.omega(u, s, t)?));
    }
    if json {
        let rows: Vec<Value> =
            pairs.iter().map(|&(u, o)| json!({"word": g.word(u).to_string(), "omega_word": g.word(o).to_string()})).collect();
        return Ok(Outcome::text(to_canonical_json(&rows)?));
    }
    let mut out = String::new();
    for (u, o) in pairs {
        writeln!(out, "Ω({}) = {}", g.format(u), g.format(o)).unwrap();
    }
    Ok(Outcome::text(out))
}

fn orbits(args: &GroupArgs, subsets: &SubsetArgs, side: &str, dot: bool, json: bool) -> Result<Outcome> {
    let g = args.group()?;
    let (s, t) = subsets.parse(g.rank())?;
    let side: Side = side.parse()?;
    let poset = OrbitPoset::build(&g, s, t, side)?;
    if dot {
        return Ok(Outcome::text(poset.to_dot(&g)));
    }
    let reps = poset.table().reps();
    let closure = |u: usize| -> Vec<usize> { (0..poset.len()).filter(|&v| poset.in_closure(v, u)).map(|v| v + 1).collect() };
    let open = |i: usize| -> Vec<usize> { poset.open(i).iter().map(|v| v + 1).collect() };
    if json {
        let rows: Vec<Value> = (0..poset.len())
            .map(|i| json!({"index": i + 1, "word": g.word(reps[i]).to_string(), "closure": closure(i), "open": open(i)}))
            .collect();
        let side_name = match side {
            Side::Q => "plus",
            Side::QMinus => "minus",
        };
        let v = json!({"S": s.labels(), "T": t.labels(), "side": side_name, "orbits": rows});
        return Ok(Outcome::text(to_canonical_json(&v)?));
    }
    let mut out = String::new();
    for i in 0..poset.len() {
        writeln!(out, "{:>3}  {:<16} closure {:?}  open {:?}", i + 1, g.format(reps[i]), closure(i), open(i)).unwrap();
    }
    Ok(Outcome { out, failures: poset.check() })
}

fn matching(args: &GroupArgs, subsets: &SubsetArgs, all: bool, json: bool) -> Result<Outcome> {
    let g = args.group()?;
    let pairs: Vec<(SimpleSubset, SimpleSubset)> = if all {
        SimpleSubset::all(g.rank()).flat_map(|s| SimpleSubset::all(g.rank()).map(move |t| (s, t))).collect()
    } else {
        vec![subsets.parse(g.rank())?]
    };
    let mut reports = Vec::with_capacity(pairs.len());
    for (s, t) in pairs {
        reports.push(dual_filtration_match(&g, s, t)?);
    }
    let failures: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("S={:?} T={:?}: {}", r.s, r.t, r.failures.join("; ")))
        .collect();
    if json {
        return Ok(Outcome { out: to_canonical_json(&reports)?, failures });
    }
    let mut out = String::new();
    writeln!(out, "{:<12} {:<12} {:>4}  result", "S", "T", "r").unwrap();
    for r in &reports {
        let verdict = if r.passed() { "pass" } else { "FAIL" };
        writeln!(out, "{:<12} {:<12} {:>4}  {verdict}", fmt_set(&r.s), fmt_set(&r.t), r.r).unwrap();
    }
    Ok(Outcome { out, failures })
}

fn fmt_set(ix: &[usize]) -> String {
    let inner: Vec<String> = ix.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn oracle_verify(n: usize, q: u8, s: Option<&str>, t: Option<&str>, json: bool) -> Result<Outcome> {
    let mut report = oracle::verify_richardson(n, q)?;
    if s.is_some() || t.is_some() {
        let s = SimpleSubset::parse(s.unwrap_or(""), n - 1)?.labels();
        let t = SimpleSubset::parse(t.unwrap_or(""), n - 1)?.labels();
        report.parabolic.retain(|p| p.s == s && p.t == t);
    }
    let mut failures = Vec::new();
    for (w, wp) in &report.missing {
        failures.push(format!("B[{w}]B ∩ B[{wp}]B⁻ is empty although {wp} <= {w}"));
    }
    for (w, wp) in &report.unexpected {
        failures.push(format!("B[{w}]B ∩ B[{wp}]B⁻ is nonempty although {wp} is not <= {w}"));
    }
    for p in &report.parabolic {
        for (u, up) in &p.missing {
            failures.push(format!("S={:?} T={:?}: ({u}, {up}) comparable but not realized", p.s, p.t));
        }
        for (u, up) in &p.unexpected {
            failures.push(format!("S={:?} T={:?}: ({u}, {up}) realized but not comparable", p.s, p.t));
        }
    }
    if json {
        return Ok(Outcome { out: to_canonical_json(&report)?, failures });
    }
    let mut out = String::new();
    writeln!(out, "GL_{n}(F_{q}): {} invertible matrices", report.gl_order).unwrap();
    writeln!(out, "realized (w, w') pairs: {} of {} comparable", report.pairs.len(), report.expected_pairs).unwrap();
    writeln!(out, "{:<10} {:>8} {:>8}", "w", "|BwB|", "|BwB⁻|").unwrap();
    for c in &report.cells {
        writeln!(out, "{:<10} {:>8} {:>8}", c.w, c.bwb, c.bwb_minus).unwrap();
    }
    for p in &report.parabolic {
        let verdict = if p.passed() { "pass" } else { "FAIL" };
        writeln!(out, "S={:<8} T={:<8} realized {:>3} expected {:>3}  {verdict}", fmt_set(&p.s), fmt_set(&p.t), p.realized, p.expected).unwrap();
    }
    Ok(Outcome { out, failures })
}

fn oracle_witness(n: usize, w: &str, wprime: &str, q: u8) -> Result<Outcome> {
    let group = oracle::symmetric_group(n)?;
    let w = Perm::parse(w)?.to_elem(&group)?;
    let wp = Perm::parse(wprime)?.to_elem(&group)?;
    let g: FqMatrix = oracle::witness(&group, w, wp, q)?;
    Ok(Outcome::text(format!("{g}\n")))
}

fn run_verify(suite: &str, args: &GroupArgs, json: bool) -> Result<Outcome> {
    let g = args.group()?;
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let results = verify::run_suites(&g, &names)?;
    let failures: Vec<String> = results
        .iter()
        .flat_map(|r| r.failures.iter().map(move |f| format!("{}: {f}", r.name)))
        .collect();
    if json {
        return Ok(Outcome { out: to_canonical_json(&results)?, failures });
    }
    let mut out = String::new();
    for r in &results {
        let verdict = match (r.skipped, r.passed()) {
            (true, _) => "skip",
            (false, true) => "pass",
            (false, false) => "FAIL",
        };
        writeln!(out, "{verdict}  {:<14} {} checks", r.name, r.checked).unwrap();
    }
    Ok(Outcome { out, failures })
}
