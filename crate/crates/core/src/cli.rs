//! Command line front end. [`run`] turns a parsed [`Cli`] into an exit code
//! and the text to print; the binary only wires it to the process.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::branching::{
    restrict_to_levi, spherical_probe_restriction, spherical_probe_tensor, tensor_decompose,
    weyl_dim_gl, Partition,
};
use crate::classifier::{
    classify, classify_aiii_borel, mwz_classify_a, mwz_classify_c, Classification, Status,
};
use crate::error::{Error, Result};
use crate::fforacle::{growth_probe, triple_growth_probe, GrowthHint, OrbitCountReport};
use crate::liecomb::pair::class_shape;
use crate::liecomb::{
    bruhat_double_cosets, enumerate_clans, twisted_involutions, Composition, DiagramAction,
    GroupDatum, KParabolicSpec, Orientation, PairKind, ParabolicSpec, Shape, SymmetricPairSpec,
    SymplecticComposition,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

const AFTER_HELP: &str = "\
Shapes: compositions use commas within a flag and semicolons between flags,
e.g. --triple \"3,1;1,1,1,1;1,1,1,1\". Symplectic shapes are written in full
palindromic form, e.g. 1,2,1. Prefix a shape with `op:` for the opposite
parabolic. K-parabolics of AIII and CII take one shape per factor, `a;b`;
the tokens K and B mean K itself and its Borel subgroup.

TSV columns: probe-orbits and triple-orbits emit `q points orbits hint`;
other commands emit `key value` rows.

Exit codes: 0 success, 1 parse or input error, 2 budget exceeded,
3 an oracle contradicts a proven verdict.";

#[derive(Debug, Parser)]
#[command(name = "flagorbits", version, about = "Finiteness of K-orbits on double flag varieties", after_help = AFTER_HELP)]
pub struct Cli {
    /// Largest number of points an oracle may enumerate.
    #[arg(long, global = true, env = "FLAGORBITS_BUDGET", default_value_t = 10_000_000)]
    pub budget: u128,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finite type test for a triple flag variety.
    Mwz {
        #[command(flatten)]
        group: GroupArgs,
        /// Three shapes separated by semicolons.
        #[arg(long)]
        triple: String,
    },
    /// Double flag verdict from both criteria and the summary tables.
    Classify(PairArgs),
    /// The five-case table for G/B × K/Q in type AIII.
    AiiiBorel {
        #[arg(long)]
        pair: String,
        /// `Q1;Q2`.
        #[arg(long)]
        q: String,
    },
    /// Orbit counts over F_q for several q, with a growth hint.
    ProbeOrbits {
        #[command(flatten)]
        args: PairArgs,
        /// Field sizes, e.g. 2,3.
        #[arg(long)]
        qlist: Option<String>,
    },
    /// Diagonal G(F_q)-orbits on two or three partial flag varieties.
    TripleOrbits {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        triple: String,
        #[arg(long, default_value = "2,3")]
        qlist: String,
    },
    /// Weyl group double cosets W_P \ W / W_P2.
    Bruhat {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        p: String,
        #[arg(long)]
        q2: String,
    },
    /// Clans of signature (p, q).
    Clans {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Twisted involutions of the Weyl group.
    TwistedInvolutions {
        #[command(flatten)]
        group: GroupArgs,
        /// Twist by the flip of the type A diagram.
        #[arg(long)]
        flip: bool,
    },
    /// Restriction to GL_p × GL_q (with --p, --q) or a tensor product (with --mu, --n).
    Branch {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
    },
    /// Multiplicity-freeness sweeps for the weight of a parabolic of GL_n.
    SphericalProbe {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        #[arg(long, default_value_t = 4)]
        lmax: u32,
    },
    /// Verdict, oracle counts, branching probes and agreement flags for one input.
    Report {
        #[command(flatten)]
        args: PairArgs,
        #[arg(long)]
        qlist: Option<String>,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
        #[arg(long, default_value_t = 3)]
        lmax: u32,
    },
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// A (GL_n) or C (Sp_2n).
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// AI, AII, AIII:p,q, CI or CII:p,q.
    #[arg(long)]
    pub pair: String,
    /// Rank, needed for AI, AII and CI.
    #[arg(long)]
    pub n: Option<usize>,
    /// Shape of P.
    #[arg(long)]
    pub p: String,
    /// Shape of Q in K.
    #[arg(long)]
    pub q: String,
}

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Rendered {
    json: Value,
    text: String,
    tsv: Option<String>,
    code: i32,
    warning: Option<String>,
}

impl Rendered {
    fn new(json: Value, text: String) -> Self {
        Rendered {
            json,
            text,
            tsv: None,
            code: EXIT_OK,
            warning: None,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_PARSE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: shown,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_PARSE,
                    stdout: String::new(),
                    stderr: shown,
                },
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(r) => {
            let stdout = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&r.json).expect("reports serialize");
                    s.push('\n');
                    s
                }
                Format::Text => r.text,
                Format::Tsv => r.tsv.unwrap_or_else(|| flat_tsv(&r.json)),
            };
            Outcome {
                code: r.code,
                stdout,
                stderr: r.warning.unwrap_or_default(),
            }
        }
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn envelope(command: &str, body: impl Serialize) -> Value {
    let mut v = json!({ "schema": 1, "command": command });
    let body = serde_json::to_value(body).expect("reports serialize");
    if let (Value::Object(dst), Value::Object(src)) = (&mut v, body) {
        dst.extend(src);
    }
    v
}

fn flat_tsv(v: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&key, x, out);
                }
            }
            Value::Array(a) => {
                for (i, x) in a.iter().enumerate() {
                    walk(&format!("{prefix}.{i}"), x, out);
                }
            }
            Value::String(s) => {
                let _ = writeln!(out, "{prefix}\t{s}");
            }
            other => {
                let _ = writeln!(out, "{prefix}\t{other}");
            }
        }
    }
    let mut out = String::from("key\tvalue\n");
    walk("", v, &mut out);
    out
}

pub fn parse_group(family: &str, n: usize) -> Result<GroupDatum> {
    let g = match family.trim().to_ascii_uppercase().as_str() {
        "A" | "GL" => GroupDatum::gl(n),
        "C" | "SP" => GroupDatum::sp(n),
        _ => return Err(Error::parse(family, "family must be A or C")),
    };
    g.validate().map_err(|e| Error::parse(n.to_string(), e.to_string()))?;
    Ok(g)
}

/// A parabolic of `group` from its shape, with an optional `op:` prefix.
pub fn parse_parabolic(group: GroupDatum, s: &str) -> Result<ParabolicSpec> {
    let t = s.trim();
    let (orientation, body) = match t.strip_prefix("op:") {
        Some(rest) => (Orientation::Opposite, rest),
        None => (Orientation::Standard, t),
    };
    let shape = match group.family {
        crate::liecomb::Family::GeneralLinear => Shape::A(body.parse::<Composition>()?),
        crate::liecomb::Family::Symplectic => Shape::C(body.parse::<SymplecticComposition>()?),
    };
    ParabolicSpec::new(group, shape, orientation).map_err(|e| Error::parse(s, e.to_string()))
}

fn parse_pair_args(a: &PairArgs) -> Result<(SymmetricPairSpec, ParabolicSpec, KParabolicSpec)> {
    let pair = SymmetricPairSpec::parse(&a.pair, a.n)?;
    let p = parse_parabolic(pair.group(), &a.p)?;
    let q = KParabolicSpec::parse(&pair, &a.q)?;
    Ok((pair, p, q))
}

fn parse_qlist(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u64>()
                .map_err(|_| Error::parse(s, format!("`{}` is not a field size", x.trim())))
        })
        .collect()
}

/// Field sizes used when none are given. Characteristic two is avoided
/// where `K` has disconnected stabilizers over `F_2`.
pub fn default_qlist(pair: &SymmetricPairSpec) -> Vec<u64> {
    match pair.kind() {
        PairKind::AIII { .. } | PairKind::AII => vec![2, 3],
        PairKind::AI | PairKind::CI | PairKind::CII { .. } => vec![3, 5],
    }
}

fn split_triple(s: &str, min: usize) -> Result<Vec<&str>> {
    let parts: Vec<&str> = s.split(';').collect();
    if parts.len() < min || parts.len() > 3 {
        return Err(Error::parse(s, format!("expected {min} to 3 shapes separated by ';'")));
    }
    Ok(parts)
}

fn dispatch(cli: &Cli) -> Result<Rendered> {
    let budget = cli.budget;
    match &cli.command {
        Command::Mwz { group, triple } => cmd_mwz(group, triple),
        Command::Classify(a) => {
            let (pair, p, q) = parse_pair_args(a)?;
            let c = classify(&pair, &p, &q)?;
            let text = classification_text(&c);
            Ok(Rendered::new(envelope("classify", &c), text))
        }
        Command::AiiiBorel { pair, q } => cmd_aiii_borel(pair, q),
        Command::ProbeOrbits { args, qlist } => {
            let (pair, p, q) = parse_pair_args(args)?;
            let qs = match qlist {
                Some(s) => parse_qlist(s)?,
                None => default_qlist(&pair),
            };
            let r = growth_probe(&pair, &p, &q, &qs, budget)?;
            Ok(probe_rendered("probe-orbits", r))
        }
        Command::TripleOrbits { group, triple, qlist } => cmd_triple_orbits(group, triple, qlist, budget),
        Command::Bruhat { group, p, q2 } => {
            let g = parse_group(&group.family, group.n)?;
            let a = parse_parabolic(g, p)?;
            let b = parse_parabolic(g, q2)?;
            let d = bruhat_double_cosets(&a, &b)?;
            let reps: Vec<String> = d.representatives.iter().map(ToString::to_string).collect();
            let text = format!("double cosets: {}\nrepresentatives: {}\n", d.count, reps.join(" "));
            Ok(Rendered::new(envelope("bruhat", &d), text))
        }
        Command::Clans { p, q } => {
            let clans = enumerate_clans(*p, *q)?;
            let list: Vec<String> = clans.iter().map(ToString::to_string).collect();
            let text = format!("clans of signature ({p},{q}): {}\n{}\n", list.len(), list.join("\n"));
            Ok(Rendered::new(
                envelope("clans", json!({ "p": p, "q": q, "count": list.len(), "clans": list })),
                text,
            ))
        }
        Command::TwistedInvolutions { group, flip } => {
            let g = parse_group(&group.family, group.n)?;
            let action = if *flip { DiagramAction::flip(g) } else { DiagramAction::identity(g) };
            let inv = twisted_involutions(g, &action)?;
            let list: Vec<String> = inv.iter().map(ToString::to_string).collect();
            let text = format!("twisted involutions of W({g}): {}\n{}\n", list.len(), list.join("\n"));
            Ok(Rendered::new(
                envelope(
                    "twisted-involutions",
                    json!({ "group": g.to_string(), "flip": flip, "count": list.len(), "elements": list }),
                ),
                text,
            ))
        }
        Command::Branch { lambda, mu, n, p, q } => cmd_branch(lambda, mu.as_deref(), *n, *p, *q),
        Command::SphericalProbe { pair, n, p, kmax, lmax } => {
            let pair = SymmetricPairSpec::parse(pair, *n)?;
            let p = parse_parabolic(pair.group(), p)?;
            let v = spherical_value(&pair, &p, *kmax, *lmax)?;
            let text = spherical_text(&v);
            Ok(Rendered::new(envelope("spherical-probe", &v), text))
        }
        Command::Report { args, qlist, kmax, lmax } => cmd_report(args, qlist.as_deref(), *kmax, *lmax, budget),
    }
}

fn cmd_mwz(group: &GroupArgs, triple: &str) -> Result<Rendered> {
    let g = parse_group(&group.family, group.n)?;
    let parts = split_triple(triple, 3)?;
    if parts.len() != 3 {
        return Err(Error::parse(triple, "expected three shapes"));
    }
    let v = match g.family {
        crate::liecomb::Family::GeneralLinear => {
            let c: Vec<Composition> = parts.iter().map(|s| s.parse()).collect::<Result<_>>()?;
            if let Some(bad) = c.iter().find(|x| x.size() != g.n) {
                return Err(Error::parse(bad.to_string(), format!("size differs from n = {}", g.n)));
            }
            mwz_classify_a(&c[0], &c[1], &c[2])?
        }
        crate::liecomb::Family::Symplectic => {
            let c: Vec<SymplecticComposition> = parts.iter().map(|s| s.parse()).collect::<Result<_>>()?;
            if let Some(bad) = c.iter().find(|x| x.rank() != g.n) {
                return Err(Error::parse(bad.to_string(), format!("size differs from 2n = {}", 2 * g.n)));
            }
            mwz_classify_c(&c[0], &c[1], &c[2])?
        }
    };
    let rows: Vec<String> = v.matched_rows.iter().map(ToString::to_string).collect();
    let mut text = format!(
        "{}: {}\n",
        if v.finite { "finite" } else { "infinite" },
        if rows.is_empty() { "no row".to_string() } else { rows.join(", ") }
    );
    for note in &v.notes {
        let _ = writeln!(text, "note: {note}");
    }
    let json = envelope(
        "mwz",
        json!({
            "group": g.to_string(),
            "finite": v.finite,
            "matched_rows": rows,
            "normalized_triple": v.normalized_triple,
            "notes": v.notes,
        }),
    );
    Ok(Rendered::new(json, text))
}

fn cmd_aiii_borel(pair: &str, q: &str) -> Result<Rendered> {
    let pair = SymmetricPairSpec::parse(pair, None)?;
    let PairKind::AIII { p, q: qq } = pair.kind() else {
        return Err(Error::parse(pair.to_string(), "aiii-borel needs an AIII pair"));
    };
    let KParabolicSpec::Aiii(q1, q2) = KParabolicSpec::parse(&pair, q)? else {
        unreachable!()
    };
    // The table is stated for the smaller factor first.
    let swapped = p > qq;
    let v = if swapped {
        classify_aiii_borel(qq, p, &q2, &q1)?
    } else {
        classify_aiii_borel(p, qq, &q1, &q2)?
    };
    let all: Vec<String> = v.all_cases.iter().map(ToString::to_string).collect();
    let text = format!(
        "{}{}\n",
        v.label(),
        if swapped { " (factors swapped so that p <= q)" } else { "" }
    );
    let json = envelope(
        "aiii-borel",
        json!({ "pair": pair.to_string(), "q": format!("{q1};{q2}"), "case": v.label(), "all_cases": all, "swapped": swapped }),
    );
    Ok(Rendered::new(json, text))
}

fn probe_rendered(command: &str, r: OrbitCountReport) -> Rendered {
    let mut text = format!("{}\n", r.subject);
    for c in &r.counts {
        let _ = writeln!(text, "q={}: {} points, {} orbits", c.q, c.points, c.orbits);
    }
    let _ = writeln!(text, "hint: {} (a heuristic, not a proof)", r.hint);
    let tsv = r.to_tsv();
    let mut out = Rendered::new(envelope(command, &r), text);
    out.tsv = Some(tsv);
    out
}

fn cmd_triple_orbits(group: &GroupArgs, triple: &str, qlist: &str, budget: u128) -> Result<Rendered> {
    let g = parse_group(&group.family, group.n)?;
    let parts = split_triple(triple, 2)?;
    let ps: Vec<ParabolicSpec> = parts.iter().map(|s| parse_parabolic(g, s)).collect::<Result<_>>()?;
    let qs = parse_qlist(qlist)?;
    let r = triple_growth_probe(g, &ps, &qs, budget)?;
    let mut out = probe_rendered("triple-orbits", r.clone());
    if ps.len() == 2 {
        // Two factors: the count is exactly the number of Bruhat double cosets.
        let std: Vec<ParabolicSpec> = ps
            .iter()
            .map(|p| ParabolicSpec::new(g, class_shape(p), Orientation::Standard))
            .collect::<Result<_>>()?;
        let expected = bruhat_double_cosets(&std[0], &std[1])?.count as u64;
        if r.counts.iter().any(|c| c.orbits != expected) {
            out.code = EXIT_DISAGREEMENT;
            out.warning = Some(format!(
                "DISAGREEMENT: orbit counts differ from the {expected} Bruhat double cosets\n"
            ));
        }
    }
    Ok(out)
}

fn cmd_branch(lambda: &str, mu: Option<&str>, n: Option<usize>, p: Option<usize>, q: Option<usize>) -> Result<Rendered> {
    let lam: Partition = lambda.parse()?;
    match (mu, n, p, q) {
        (Some(mu), Some(n), None, None) => {
            let m: Partition = mu.parse()?;
            let d = tensor_decompose(&lam, &m, n)?;
            let mut text = format!("V({lam}) ⊗ V({m}) for GL_{n}\n");
            for (nu, c) in d.terms() {
                let _ = writeln!(text, "{c} × ({nu})  dim {}", weyl_dim_gl(nu, n)?);
            }
            let _ = writeln!(text, "multiplicity free: {}", d.is_multiplicity_free());
            let json = envelope(
                "branch",
                json!({ "kind": "tensor", "lambda": lam, "mu": m, "n": n, "multiplicity_free": d.is_multiplicity_free(), "terms": d }),
            );
            Ok(Rendered::new(json, text))
        }
        (None, None, Some(p), Some(q)) => {
            let d = restrict_to_levi(&lam, p, q)?;
            let mut text = format!("V({lam}) of GL_{} restricted to GL_{p} × GL_{q}\n", p + q);
            for (w, c) in d.terms() {
                let _ = writeln!(text, "{c} × ({}) ⊗ ({})", w.0, w.1);
            }
            let _ = writeln!(text, "multiplicity free: {}", d.is_multiplicity_free());
            let json = envelope(
                "branch",
                json!({ "kind": "restriction", "lambda": lam, "p": p, "q": q, "multiplicity_free": d.is_multiplicity_free(), "terms": d }),
            );
            Ok(Rendered::new(json, text))
        }
        _ => Err(Error::parse(lambda, "give either --mu and --n (tensor) or --p and --q (restriction)")),
    }
}

#[derive(Serialize)]
struct SphericalValue {
    pair: String,
    p: String,
    weight: Partition,
    tensor: crate::branching::ProbeOutcome,
    restriction: Option<crate::branching::ProbeOutcome>,
    /// Tensor multiplicity freeness implies restriction multiplicity freeness.
    implication_holds: Option<bool>,
}

fn spherical_value(pair: &SymmetricPairSpec, p: &ParabolicSpec, kmax: u32, lmax: u32) -> Result<SphericalValue> {
    let tensor = spherical_probe_tensor(p, pair, kmax, lmax)?;
    let restriction = match pair.kind() {
        PairKind::AIII { p: a, q: b } => Some(spherical_probe_restriction(p, a, b, kmax)?),
        _ => None,
    };
    let implication_holds = restriction.as_ref().map(|r| !tensor.holds || r.holds);
    Ok(SphericalValue {
        pair: pair.to_string(),
        p: class_shape(p).to_string(),
        weight: crate::branching::highest_weight_of_parabolic(p)?,
        tensor,
        restriction,
        implication_holds,
    })
}

fn probe_line(name: &str, o: &crate::branching::ProbeOutcome) -> String {
    let bound = match o.l_max {
        Some(l) => format!("k <= {}, l <= {l}", o.k_max),
        None => format!("k <= {}", o.k_max),
    };
    match &o.first_failure {
        None => format!("{name}: multiplicity free for {bound}\n"),
        Some(f) => format!(
            "{name}: fails at k = {}{} with ({}) of multiplicity {} (sweep {bound})\n",
            f.k,
            f.l.map(|l| format!(", l = {l}")).unwrap_or_default(),
            f.constituent.trim_start_matches('(').trim_end_matches(')'),
            f.multiplicity
        ),
    }
}

fn spherical_text(v: &SphericalValue) -> String {
    let mut text = format!("{} P=({}) weight ({})\n", v.pair, v.p, v.weight);
    text.push_str(&probe_line("tensor", &v.tensor));
    if let Some(r) = &v.restriction {
        text.push_str(&probe_line("restriction", r));
    }
    if let Some(ok) = v.implication_holds {
        let _ = writeln!(text, "tensor => restriction: {}", if ok { "holds" } else { "VIOLATED" });
    }
    text
}

fn classification_text(c: &Classification) -> String {
    let mut text = format!("{} P=({}) Q=({})\nstatus: {:?}\n", c.pair, c.p, c.q, c.status);
    for (name, v) in [("triple criterion", &c.via_triple), ("intersection criterion", &c.via_intersection)] {
        let _ = write!(text, "{name}: {:?}", v.status);
        if let Some(w) = &v.witness {
            let _ = write!(text, " via ({}) {} [{}]", w.triple.join(" | "), w.table_row, w.citation);
            if let Some(pp) = &w.p_prime {
                let _ = write!(text, " {pp}");
            }
            if let (Some(p2), Some(p3)) = (&w.p2, &w.p3) {
                let _ = write!(text, " P2={p2} P3={p3}");
            }
        }
        text.push('\n');
    }
    if !c.summary_rows.is_empty() {
        let rows: Vec<&str> = c.summary_rows.iter().map(|r| r.citation.as_str()).collect();
        let _ = writeln!(text, "summary tables: {}", rows.join(", "));
    }
    if !c.consistent {
        text.push_str("INCONSISTENT: the criteria disagree\n");
    }
    text
}

fn cmd_report(args: &PairArgs, qlist: Option<&str>, kmax: u32, lmax: u32, budget: u128) -> Result<Rendered> {
    let (pair, p, q) = parse_pair_args(args)?;
    let c = classify(&pair, &p, &q)?;
    let qs = match qlist {
        Some(s) => parse_qlist(s)?,
        None => default_qlist(&pair),
    };
    let mut code = EXIT_OK;
    let mut warnings = String::new();
    let oracle = match growth_probe(&pair, &p, &q, &qs, budget) {
        Ok(r) => Some(r),
        Err(e @ Error::BudgetExceeded { .. }) => {
            code = EXIT_BUDGET;
            let _ = writeln!(warnings, "oracle skipped: {e}");
            None
        }
        Err(e) => return Err(e),
    };
    let oracle_agrees = oracle.as_ref().map(|r| match c.status {
        Status::FiniteProven => r.hint == GrowthHint::Bounded,
        Status::InfiniteProven => r.hint != GrowthHint::Bounded,
        Status::Unknown => true,
    });
    let spherical = if pair.group().family == crate::liecomb::Family::GeneralLinear {
        Some(spherical_value(&pair, &p, kmax, lmax)?)
    } else {
        None
    };
    if oracle_agrees == Some(false) || !c.consistent || spherical.as_ref().and_then(|s| s.implication_holds) == Some(false) {
        code = EXIT_DISAGREEMENT;
        let _ = writeln!(warnings, "DISAGREEMENT: an oracle contradicts a proven verdict");
    }
    let mut text = classification_text(&c);
    match &oracle {
        Some(r) => {
            for x in &r.counts {
                let _ = writeln!(text, "oracle q={}: {} points, {} orbits", x.q, x.points, x.orbits);
            }
            let _ = writeln!(text, "oracle hint: {} (agrees: {})", r.hint, oracle_agrees.unwrap_or(true));
        }
        None => text.push_str("oracle: skipped (budget)\n"),
    }
    if let Some(s) = &spherical {
        text.push_str(&spherical_text(s));
    }
    let json = envelope(
        "report",
        json!({
            "classification": c,
            "oracle": oracle,
            "oracle_agrees": oracle_agrees,
            "spherical": spherical,
        }),
    );
    let mut out = Rendered::new(json, text);
    out.code = code;
    out.warning = (!warnings.is_empty()).then_some(warnings);
    Ok(out)
}
