//! `tlqkz`: solve, verify and specialize level-one qKZ systems.

mod output;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use output::{emit, int_json, Format, Rendered};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use tlqkz::algebra::{build, validate_relations, AlgebraSpec, Kind};
use tlqkz::arith::Rat;
use tlqkz::limits::{degree_vector, hotta_check, max_entry, rational_limit, rs_data_modular, rs_homogeneous, sum_entries};
use tlqkz::oracle::{brute_force_asm, count, Family, Symmetry, BRUTE_FORCE_MAX};
use tlqkz::patterns::{Pairing, Pattern};
use tlqkz::qkz::{Solution, System};
use tlqkz::rmatrix;
use tlqkz::serial::{solution_from_json, solution_to_json, QPoint};

/// Failure classes, each with its own exit status.
#[derive(Debug)]
pub enum Fail {
    Usage(String),
    Integrity(String),
}

impl Fail {
    fn code(&self) -> u8 {
        match self {
            Fail::Usage(_) => 2,
            Fail::Integrity(_) => 3,
        }
    }
}

impl From<tlqkz::Error> for Fail {
    fn from(e: tlqkz::Error) -> Self {
        match e {
            tlqkz::Error::Usage(m) => Fail::Usage(m),
            e => Fail::Integrity(e.to_string()),
        }
    }
}

pub type Res<T> = std::result::Result<T, Fail>;

#[derive(Parser)]
#[command(name = "tlqkz", version, about = "Exact level-one qKZ solutions on Temperley-Lieb link patterns")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum TypeArg {
    A,
    B,
    C,
    D,
}

impl From<TypeArg> for Kind {
    fn from(t: TypeArg) -> Self {
        match t {
            TypeArg::A => Kind::A,
            TypeArg::B => Kind::B,
            TypeArg::C => Kind::C,
            TypeArg::D => Kind::D,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum QArg {
    Generic,
    Rs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PairingArg {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrientationArg {
    Row,
    Col,
}

#[derive(Args, Clone)]
struct Target {
    #[arg(long = "type", value_enum, value_name = "TYPE")]
    kind: Option<TypeArg>,
    /// Rank r; for type A the number of points N.
    #[arg(long, visible_alias = "rank-points")]
    rank: Option<usize>,
    #[arg(long, value_enum, default_value = "right")]
    d_pairing: PairingArg,
}

#[derive(Args)]
struct Io {
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve the generic-q system and write a solution file.
    Solve {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "generic")]
        q: QArg,
        #[command(flatten)]
        io: Io,
    },
    /// Check every exchange relation and identity on a solution file.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        io: Io,
    },
    /// Integer vector at q = ω, w = 1, normalized by the base entry.
    Special {
        #[command(flatten)]
        target: Target,
        /// Read a solution file instead of solving.
        #[arg(long, conflicts_with_all = ["kind", "rank"])]
        from: Option<PathBuf>,
        #[arg(long, value_enum)]
        q: Option<QArg>,
        #[command(flatten)]
        io: Io,
    },
    /// Rational limits of the entries and their degree vector.
    Multidegree {
        #[command(flatten)]
        target: Target,
        #[arg(long, conflicts_with_all = ["kind", "rank"])]
        from: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "row")]
        hotta_orientation: OrientationArg,
        #[command(flatten)]
        io: Io,
    },
    /// Symmetry-class counts.
    Oracle {
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Add exhaustive counts for n up to the brute-force bound.
        #[arg(long)]
        brute: bool,
        #[command(flatten)]
        io: Io,
    },
    /// Defining relations, unitarity, Yang-Baxter and reflection equations.
    Relations {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        io: Io,
    },
    /// Sum rules and ground-state checks with PASS/FAIL per line.
    Report {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "rs")]
        q: QArg,
        #[command(flatten)]
        io: Io,
    },
}

fn pairing(p: PairingArg) -> Pairing {
    match p {
        PairingArg::Left => Pairing::Left,
        PairingArg::Right => Pairing::Right,
    }
}

impl Target {
    fn spec(&self) -> Res<AlgebraSpec> {
        let (Some(kind), Some(rank)) = (self.kind, self.rank) else {
            return Err(Fail::Usage("--type and --rank are required".into()));
        };
        Ok(AlgebraSpec { kind: kind.into(), rank, pairing: pairing(self.d_pairing) })
    }
}

/// Largest rank accepted per type for a generic-q and a modular solve.
fn bound(kind: Kind, q: QPoint) -> usize {
    match (kind, q) {
        (Kind::A, QPoint::Generic) => 10,
        (Kind::B, QPoint::Generic) => 6,
        (Kind::C | Kind::D, QPoint::Generic) => 5,
        (Kind::A, QPoint::Rs) => 12,
        (Kind::B, QPoint::Rs) => 8,
        (Kind::C | Kind::D, QPoint::Rs) => 7,
    }
}

pub fn system(spec: AlgebraSpec, q: QPoint) -> Res<System> {
    if spec.rank > bound(spec.kind, q) {
        return Err(Fail::Usage(format!(
            "{}{} is beyond the supported bound {} for q = {}",
            spec.kind,
            spec.rank,
            bound(spec.kind, q),
            q.name()
        )));
    }
    Ok(System::new(spec)?)
}

fn read_solution(path: &Path) -> Res<Solution> {
    let text = std::fs::read_to_string(path).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Fail::Integrity(format!("{}: {e}", path.display())))?;
    Ok(Solution::from_file(solution_from_json(&v)?))
}

fn name(spec: &AlgebraSpec) -> String {
    format!("{}{}", spec.kind, spec.rank)
}

fn solve_cmd(target: &Target, q: QArg) -> Res<Rendered> {
    if let QArg::Rs = q {
        return Err(Fail::Usage("solution files hold generic-q entries; use `special --q rs`".into()));
    }
    let spec = target.spec()?;
    let sol = system(spec, QPoint::Generic)?.solve()?;
    let v = solution_to_json(&sol.to_file());
    let names: Vec<String> = (1..=spec.rank).map(|i| format!("w{i}")).collect();
    let mut text = String::new();
    let mut csv = String::from("pattern,entry\n");
    for (p, e) in sol.patterns.iter().zip(&sol.entries) {
        text += &format!("{p}: {}\n", e.display_with(&names));
        csv += &format!("{p},\"{}\"\n", e.display_with(&names));
    }
    Ok(Rendered { text, csv, json: v })
}

fn verify_cmd(file: &Path) -> Res<(Rendered, bool)> {
    let sol = read_solution(file)?;
    let sys = System::new(sol.spec)?;
    if sol.patterns.as_slice() != sys.index().patterns() {
        return Err(Fail::Integrity("patterns differ from the enumerated basis".into()));
    }
    let checks = sys.verify(&sol)?;
    let ok = checks.iter().all(|(_, bad)| bad.is_empty());
    let mut text = String::new();
    let mut csv = String::from("relation,status,failing\n");
    let mut rows = Vec::new();
    for (n, bad) in &checks {
        let status = if bad.is_empty() { "PASS" } else { "FAIL" };
        if bad.is_empty() {
            text += &format!("{status} {n}\n");
        } else {
            text += &format!("{status} {n}: {}\n", bad.join(" "));
        }
        csv += &format!("{n},{status},{}\n", bad.join(" "));
        rows.push(json!({ "relation": n, "status": status, "failing": bad }));
    }
    text += &format!("{} {}\n", name(&sol.spec), if ok { "verified" } else { "FAILED" });
    Ok((Rendered { text, csv, json: json!({ "system": name(&sol.spec), "ok": ok, "checks": rows }) }, ok))
}

fn vector_render(label: &str, patterns: &[Pattern], base: &Pattern, v: &[BigInt], q: QPoint) -> Rendered {
    let sum = sum_entries(v);
    let max = max_entry(v);
    let mut text = format!("{label} at q = ω, w = 1 (q {}), base {base}\n", q.name());
    let mut csv = String::from("pattern,value\n");
    for (p, x) in patterns.iter().zip(v) {
        text += &format!("{p} {x}\n");
        csv += &format!("{p},{x}\n");
    }
    let list: Vec<String> = v.iter().map(BigInt::to_string).collect();
    text += &format!("vector ({})\nsum {sum}\nmax {max}\n", list.join(","));
    csv += &format!("sum,{sum}\nmax,{max}\n");
    let json = json!({
        "system": label,
        "q": q.name(),
        "base": base.text(),
        "patterns": patterns.iter().map(Pattern::text).collect::<Vec<_>>(),
        "vector": v.iter().map(int_json).collect::<Vec<_>>(),
        "sum": int_json(&sum),
        "max": int_json(&max),
    });
    Rendered { text, csv, json }
}

fn special_cmd(target: &Target, from: Option<&Path>, q: Option<QArg>) -> Res<Rendered> {
    if let Some(path) = from {
        let sol = read_solution(path)?;
        let base = System::new(sol.spec)?.base_pattern;
        let v = rs_homogeneous(&sol, &base)?;
        return Ok(vector_render(&name(&sol.spec), &sol.patterns, &base, &v, QPoint::Generic));
    }
    let spec = target.spec()?;
    let q = match q {
        Some(QArg::Rs) => QPoint::Rs,
        _ => QPoint::Generic,
    };
    let sys = system(spec, q)?;
    let v = match q {
        QPoint::Generic => rs_homogeneous(&sys.solve()?, &sys.base_pattern)?,
        QPoint::Rs => rs_data_modular(&sys)?.vector,
    };
    Ok(vector_render(&name(&spec), sys.index().patterns(), &sys.base_pattern, &v, q))
}

fn multidegree_cmd(target: &Target, from: Option<&Path>, orient: OrientationArg) -> Res<(Rendered, bool)> {
    let sol = match from {
        Some(p) => read_solution(p)?,
        None => system(target.spec()?, QPoint::Generic)?.solve()?,
    };
    let r = sol.spec.rank;
    let md = rational_limit(&sol)?;
    let deg = degree_vector(&md)?;
    let mut names: Vec<String> = (1..=r).map(|i| format!("z{i}")).collect();
    names.push("A".into());
    let label = name(&sol.spec);
    let mut text = format!("{label} multidegrees\n");
    let mut csv = String::from("pattern,degree,multidegree\n");
    for ((p, m), d) in sol.patterns.iter().zip(&md).zip(&deg) {
        text += &format!("{p}: {}\n", m.display_with(&names));
        csv += &format!("{p},{d},\"{}\"\n", m.display_with(&names));
    }
    let list: Vec<String> = deg.iter().map(BigInt::to_string).collect();
    text += &format!("degrees ({})\n", list.join(","));
    let mut ok = true;
    let mut sites = Vec::new();
    if sol.spec.kind == Kind::A {
        let rep = build(sol.spec)?;
        for s in hotta_check(&md, &rep.e)? {
            let matches = match orient {
                OrientationArg::Row => s.matches_row,
                OrientationArg::Col => s.matches_col,
            };
            let pass = s.mu.is_some() && s.nonneg_integer && s.involution && matches;
            ok &= pass;
            let yn = |b: bool| if b { "yes" } else { "no" };
            text += &format!(
                "hotta site {} closed={} nonneg={} involution={} matches-{}={} {}\n",
                s.site,
                yn(s.mu.is_some()),
                yn(s.nonneg_integer),
                yn(s.involution),
                if orient == OrientationArg::Row { "row" } else { "col" },
                yn(matches),
                if pass { "PASS" } else { "FAIL" }
            );
            let mu = s.mu.as_ref().map(|m| {
                m.iter().map(|row| row.iter().map(Rat::to_string).collect::<Vec<_>>()).collect::<Vec<_>>()
            });
            sites.push(json!({
                "site": s.site,
                "closed": s.mu.is_some(),
                "mu": mu,
                "nonneg_integer": s.nonneg_integer,
                "involution": s.involution,
                "matches": matches,
            }));
        }
    }
    let json = json!({
        "system": label,
        "variables": names,
        "patterns": sol.patterns.iter().map(Pattern::text).collect::<Vec<_>>(),
        "multidegrees": md.iter().map(tlqkz::serial::poly_to_json).collect::<Vec<_>>(),
        "degrees": deg.iter().map(int_json).collect::<Vec<_>>(),
        "hotta": sites,
    });
    Ok((Rendered { text, csv, json }, ok))
}

fn oracle_cmd(family: Option<&str>, n: usize, brute: bool) -> Res<Rendered> {
    if let Some(f) = family {
        let f: Family = f.parse()?;
        let c = count(f, n)?;
        let mut json = json!({ "family": f.name(), "n": n, "count": int_json(&c) });
        let mut text = format!("{c}\n");
        let mut csv = format!("family,n,count\n{f},{n},{c}\n");
        if brute {
            let sym = match f {
                Family::A => Symmetry::None,
                Family::AV => Symmetry::Vertical,
                Family::AHT => Symmetry::HalfTurn,
                _ => return Err(Fail::Usage(format!("no exhaustive count for {f}"))),
            };
            let b = brute_force_asm(n, sym)?;
            text = format!("{c} brute-force {b}\n");
            csv = format!("family,n,count,brute_force\n{f},{n},{c},{b}\n");
            json["brute_force"] = json!(b);
        }
        return Ok(Rendered { text, csv, json });
    }
    if n == 0 || n > 20 {
        return Err(Fail::Usage("table size must be between 1 and 20".into()));
    }
    let fams = [Family::A, Family::AV, Family::AHT, Family::Csscpp, Family::AMixed];
    let mut text = format!("{:>3}", "n");
    let mut csv = String::from("n");
    for f in fams {
        text += &format!(" {:>14}", f.name());
        csv += &format!(",{f}");
    }
    if brute {
        text += &format!(" {:>10} {:>10} {:>10}", "bf A", "bf A_V", "bf A_HT");
        csv += ",bf_A,bf_A_V,bf_A_HT";
    }
    text.push('\n');
    csv.push('\n');
    let mut rows = Vec::new();
    for k in 1..=n {
        let counts: Vec<BigInt> = fams.iter().map(|&f| count(f, k)).collect::<tlqkz::Result<_>>()?;
        text += &format!("{k:>3}");
        csv += &k.to_string();
        let mut row = json!({ "n": k });
        for (f, c) in fams.iter().zip(&counts) {
            text += &format!(" {c:>14}");
            csv += &format!(",{c}");
            row[f.name()] = int_json(c);
        }
        if brute {
            for sym in [Symmetry::None, Symmetry::Vertical, Symmetry::HalfTurn] {
                let b = if k <= BRUTE_FORCE_MAX { brute_force_asm(k, sym)?.to_string() } else { "-".into() };
                text += &format!(" {b:>10}");
                csv += &format!(",{b}");
            }
        }
        text.push('\n');
        csv.push('\n');
        rows.push(row);
    }
    Ok(Rendered { text, csv, json: json!({ "rows": rows }) })
}

fn relations_cmd(target: &Target) -> Res<(Rendered, bool)> {
    let spec = target.spec()?;
    let rep = build(spec)?;
    let mut lines: Vec<(String, bool, bool)> =
        validate_relations(&rep).into_iter().map(|c| (c.name, c.holds, c.expected)).collect();
    lines.extend(rmatrix::validate(&rep).into_iter().map(|(n, ok)| (n, ok, true)));
    let mut ok = true;
    let mut text = String::new();
    let mut csv = String::from("relation,holds,expected,status\n");
    let mut rows = Vec::new();
    for (n, holds, expected) in &lines {
        let status = if holds == expected { "PASS" } else { "FAIL" };
        ok &= holds == expected;
        let note = if *expected { "" } else { " (does not hold, as expected)" };
        text += &format!("{status} {n}{note}\n");
        csv += &format!("\"{n}\",{holds},{expected},{status}\n");
        rows.push(json!({ "relation": n, "holds": holds, "expected": expected, "status": status }));
    }
    Ok((Rendered { text, csv, json: json!({ "system": name(&spec), "checks": rows }) }, ok))
}

fn run(cli: Cli) -> Res<bool> {
    match cli.cmd {
        Cmd::Solve { target, q, io } => {
            let fmt = io.format.unwrap_or(Format::Json);
            emit(&solve_cmd(&target, q)?, fmt, io.out.as_deref())?;
            Ok(true)
        }
        Cmd::Verify { file, io } => {
            let (r, ok) = verify_cmd(&file)?;
            emit(&r, io.format.unwrap_or(Format::Text), io.out.as_deref())?;
            Ok(ok)
        }
        Cmd::Special { target, from, q, io } => {
            emit(&special_cmd(&target, from.as_deref(), q)?, io.format.unwrap_or(Format::Text), io.out.as_deref())?;
            Ok(true)
        }
        Cmd::Multidegree { target, from, hotta_orientation, io } => {
            let (r, ok) = multidegree_cmd(&target, from.as_deref(), hotta_orientation)?;
            emit(&r, io.format.unwrap_or(Format::Text), io.out.as_deref())?;
            Ok(ok)
        }
        Cmd::Oracle { family, n, brute, io } => {
            emit(&oracle_cmd(family.as_deref(), n, brute)?, io.format.unwrap_or(Format::Text), io.out.as_deref())?;
            Ok(true)
        }
        Cmd::Relations { target, io } => {
            let (r, ok) = relations_cmd(&target)?;
            emit(&r, io.format.unwrap_or(Format::Text), io.out.as_deref())?;
            Ok(ok)
        }
        Cmd::Report { target, q, io } => {
            let q = match q {
                QArg::Generic => QPoint::Generic,
                QArg::Rs => QPoint::Rs,
            };
            let specs = match (target.kind, target.rank) {
                (None, None) => report::EXAMPLES.iter().map(|&(k, r)| AlgebraSpec::new(k, r)).collect(),
                _ => vec![target.spec()?],
            };
            let lines = report::run(&specs, q)?;
            let ok = lines.iter().all(|l| l.status != report::Status::Fail);
            emit(&report::render(&lines), io.format.unwrap_or(Format::Text), io.out.as_deref())?;
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            let (Fail::Usage(m) | Fail::Integrity(m)) = &f;
            eprintln!("tlqkz: {m}");
            ExitCode::from(f.code())
        }
    }
}
