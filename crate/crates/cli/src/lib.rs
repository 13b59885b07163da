//! `coxbruhat` command-line interface.
//!
//! Exit codes: 0 on success, 1 on a domain error (reported by its error
//! name), 2 on a usage error.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coxbruhat::bruhat::{covers, leq, lower_interval, poincare};
use coxbruhat::coset_max::{max_in_coset, max_in_relative_coset, shifted_max_set, CosetMaxResult};
use coxbruhat::hasse::{hasse_dot, PALETTE};
use coxbruhat::oracle::sweep_coset_max;
use coxbruhat::parabolic::{coset_rep, decompose};
use coxbruhat::poincare::{
    bp_report, decompose_poincare, relative_decompose_poincare, relative_poincare, BPReport,
    PoincareDecomposition,
};
use coxbruhat::{CoxeterSystem, Element, Error, GenSet, IntPolynomial, Side};

#[derive(Debug, Parser)]
#[command(name = "coxbruhat", version, about = "Bruhat intervals and parabolic cosets in Coxeter groups")]
pub struct Cli {
    /// Preset group: A3, B3, D4, F4, H3, H4, I2:<m>, ~A<n>
    #[arg(long = "type", global = true, conflicts_with = "matrix")]
    pub group_type: Option<String>,

    /// Coxeter matrix JSON file: {"generators": [...], "m": [[...]]}, 0 = infinity
    #[arg(long, global = true)]
    pub matrix: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[arg(long = "length-cap", global = true)]
    pub length_cap: Option<usize>,

    #[arg(long = "interval-bound", global = true)]
    pub interval_bound: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Right,
    Left,
}

#[derive(Debug, Clone, Args)]
pub struct WArg {
    /// Element as a word, e.g. "s1 s2 s1" or s1s2s1
    #[arg(long = "w", required_unless_present = "perm", conflicts_with = "perm")]
    pub w: Option<String>,
    /// Type A only: one-line permutation notation, e.g. 4231
    #[arg(long)]
    pub perm: Option<String>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Length and canonical word
    Len(WArg),
    /// Bruhat comparison u <= w
    Leq {
        #[arg(long = "u")]
        u: String,
        #[command(flatten)]
        w: WArg,
    },
    /// Lower interval [e,w]
    Interval(WArg),
    /// Lower covers of w
    Covers(WArg),
    /// Poincare polynomial P_w
    Poincare(WArg),
    /// Relative Poincare polynomial P^J_w
    PoincareRel {
        #[command(flatten)]
        w: WArg,
        #[arg(long = "J")]
        j: String,
    },
    /// Parabolic decomposition
    Decompose {
        #[command(flatten)]
        w: WArg,
        #[arg(long = "J")]
        j: String,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
    },
    /// Minimal representative of wW_J
    CosetRep {
        #[command(flatten)]
        w: WArg,
        #[arg(long = "J")]
        j: String,
    },
    /// Maximum of [e,w] ∩ xW_J
    MaxCoset {
        #[command(flatten)]
        w: WArg,
        #[arg(long = "x")]
        x: String,
        #[arg(long = "J")]
        j: String,
    },
    /// Table of m_J(w,x) over x in [e,w] ∩ W^J
    MjTable {
        #[command(flatten)]
        w: WArg,
        #[arg(long = "J")]
        j: String,
    },
    /// The set M_J(w) of shifted maxima
    MaxSet {
        #[command(flatten)]
        w: WArg,
        #[arg(long = "J")]
        j: String,
    },
    /// Maximum of [e,w]^J ∩ xW^J_K
    RelMax {
        #[command(flatten)]
        w: WArg,
        #[arg(long = "x")]
        x: String,
        #[arg(long = "J")]
        j: String,
        #[arg(long = "K")]
        k: String,
    },
    /// Schubert-fiber index m^J_K(w,x) (same computation as rel-max)
    Fiber {
        #[command(flatten)]
        w: WArg,
        #[arg(long = "x")]
        x: String,
        #[arg(long = "J")]
        j: String,
        #[arg(long = "K")]
        k: String,
    },
    /// Billey-Postnikov check
    Bp {
        #[command(flatten)]
        w: WArg,
        #[arg(long = "J")]
        j: String,
    },
    /// Coset decomposition of P_w (or of P^J_w over [e,w]^K with --K)
    PoincareDecomp {
        #[command(flatten)]
        w: WArg,
        #[arg(long = "J")]
        j: String,
        #[arg(long = "K")]
        k: Option<String>,
    },
    /// BP check for every J
    BpScan(WArg),
    /// Hasse diagram of [e,w], coloured by the cosets of W_J
    Hasse {
        #[command(flatten)]
        w: WArg,
        #[arg(long = "J")]
        j: Option<String>,
    },
    /// Compare the coset-maximum construction against brute force
    Verify {
        /// Sweep elements up to this length (default: whole group if finite, else 4)
        #[arg(long = "max-length")]
        max_length: Option<usize>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Len(_) => "len",
            Command::Leq { .. } => "leq",
            Command::Interval(_) => "interval",
            Command::Covers(_) => "covers",
            Command::Poincare(_) => "poincare",
            Command::PoincareRel { .. } => "poincare-rel",
            Command::Decompose { .. } => "decompose",
            Command::CosetRep { .. } => "coset-rep",
            Command::MaxCoset { .. } => "max-coset",
            Command::MjTable { .. } => "mj-table",
            Command::MaxSet { .. } => "max-set",
            Command::RelMax { .. } => "rel-max",
            Command::Fiber { .. } => "fiber",
            Command::Bp { .. } => "bp",
            Command::PoincareDecomp { .. } => "poincare-decomp",
            Command::BpScan(_) => "bp-scan",
            Command::Hasse { .. } => "hasse",
            Command::Verify { .. } => "verify",
        }
    }
}

/// Why a command failed.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = writeln!(err, "{}", usage_line(&e));
            return 2;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(CliError::Domain(e)) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            1
        }
    }
}

/// Clap's diagnostic squeezed onto one line that names the flag involved.
fn usage_line(e: &clap::Error) -> String {
    use clap::error::{ContextKind, ContextValue, ErrorKind};
    let flags = match e.get(ContextKind::InvalidArg) {
        Some(ContextValue::String(s)) => s.clone(),
        Some(ContextValue::Strings(v)) => v.join(", "),
        _ => String::new(),
    };
    if e.kind() == ErrorKind::MissingRequiredArgument && !flags.is_empty() {
        return format!("error: missing required argument: {flags}");
    }
    let rendered = e.to_string();
    let first = rendered.lines().next().unwrap_or("error: invalid usage");
    if flags.is_empty() || first.contains(flags.as_str()) {
        first.to_string()
    } else {
        format!("{first} ({flags})")
    }
}

/// Runs a parsed command and returns what it would print.
pub fn execute(cli: &Cli) -> CliResult<String> {
    let sys = load_system(cli)?;
    let ctx = Ctx { sys: &sys };
    if cli.format == Format::Dot && !matches!(cli.command, Command::Hasse { .. }) {
        return Err(CliError::Usage("--format dot is only valid for hasse".into()));
    }
    let (text, value) = match &cli.command {
        Command::Len(w) => ctx.len(w)?,
        Command::Leq { u, w } => ctx.leq(u, w)?,
        Command::Interval(w) => ctx.interval(w)?,
        Command::Covers(w) => ctx.covers(w)?,
        Command::Poincare(w) => ctx.poincare(w)?,
        Command::PoincareRel { w, j } => ctx.poincare_rel(w, j)?,
        Command::Decompose { w, j, side } => ctx.decompose(w, j, *side)?,
        Command::CosetRep { w, j } => ctx.coset_rep(w, j)?,
        Command::MaxCoset { w, x, j } => ctx.max_coset(w, x, j)?,
        Command::MjTable { w, j } => ctx.mj_table(w, j)?,
        Command::MaxSet { w, j } => ctx.max_set(w, j)?,
        Command::RelMax { w, x, j, k } => ctx.rel_max(w, x, j, k, "m^J_K(w,x)")?,
        Command::Fiber { w, x, j, k } => ctx.rel_max(w, x, j, k, "fiber index m^J_K(w,x)")?,
        Command::Bp { w, j } => ctx.bp(w, j)?,
        Command::PoincareDecomp { w, j, k } => ctx.poincare_decomp(w, j, k.as_deref())?,
        Command::BpScan(w) => ctx.bp_scan(w)?,
        Command::Hasse { w, j } => ctx.hasse(w, j.as_deref(), cli.format)?,
        Command::Verify { max_length } => ctx.verify(*max_length)?,
    };
    Ok(match cli.format {
        Format::Json => {
            let mut root = serde_json::Map::new();
            root.insert(cli.command.name().to_string(), value);
            let mut s = serde_json::to_string_pretty(&Value::Object(root))
                .expect("JSON values always serialize");
            s.push('\n');
            s
        }
        Format::Text | Format::Dot => text,
    })
}

fn load_system(cli: &Cli) -> CliResult<CoxeterSystem> {
    let sys = match (&cli.group_type, &cli.matrix) {
        (Some(t), _) => CoxeterSystem::from_type(t)
            .map_err(|_| CliError::Usage(format!("--type: unknown Coxeter type '{t}'")))?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("--matrix: cannot read '{path}': {e}")))?;
            CoxeterSystem::from_json(&text)?
        }
        (None, None) => return Err(CliError::Usage("one of --type or --matrix is required".into())),
    };
    let sys = match cli.length_cap {
        Some(cap) => sys.with_length_cap(cap),
        None => sys,
    };
    Ok(match cli.interval_bound {
        Some(bound) => sys.with_interval_bound(bound),
        None => sys,
    })
}

/// Converts one-line notation to a word, `s_i` swapping positions `i, i+1`.
pub fn perm_to_word(perm: &str, n: usize) -> Option<Vec<usize>> {
    let mut values: Vec<usize> = if perm.contains(|c: char| c == ',' || c.is_whitespace()) {
        perm.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().ok())
            .collect::<Option<_>>()?
    } else {
        perm.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()?
    };
    let mut sorted = values.clone();
    sorted.sort_unstable();
    if sorted != (1..=n + 1).collect::<Vec<_>>() {
        return None;
    }
    // bubble sort: w s_{r1} s_{r2} ... = e, so w = ... s_{r2} s_{r1}
    let mut letters = Vec::new();
    while let Some(i) = (0..n).find(|&i| values[i] > values[i + 1]) {
        values.swap(i, i + 1);
        letters.push(i);
    }
    letters.reverse();
    Some(letters)
}

struct Ctx<'a> {
    sys: &'a CoxeterSystem,
}

type Output = (String, Value);

impl Ctx<'_> {
    fn fmt(&self, w: &Element) -> String {
        self.sys.format(w)
    }

    fn fmt_set(&self, j: GenSet) -> String {
        self.sys.format_genset(j)
    }

    fn set_json(&self, j: GenSet) -> Value {
        json!(self.sys.genset_names(j))
    }

    fn poly_json(p: &IntPolynomial) -> Value {
        json!({ "coeffs": p.coeffs(), "text": p.to_string() })
    }

    fn element(&self, text: &str, flag: &str) -> CliResult<Element> {
        let word = self.sys.parse_word(text).map_err(|e| match e {
            Error::UnknownGenerator(g) => CliError::Usage(format!("{flag}: unknown generator '{g}'")),
            other => CliError::Domain(other),
        })?;
        Ok(self.sys.normalize(&word)?)
    }

    fn w(&self, arg: &WArg) -> CliResult<Element> {
        match (&arg.w, &arg.perm) {
            (Some(w), _) => self.element(w, "--w"),
            (None, Some(p)) => {
                let is_type_a = (0..self.sys.rank()).all(|i| {
                    (0..self.sys.rank()).all(|j| {
                        let m = self.sys.order(i, j);
                        match i.abs_diff(j) {
                            0 => m == 1,
                            1 => m == 3,
                            _ => m == 2,
                        }
                    })
                });
                if !is_type_a {
                    return Err(CliError::Usage("--perm is only accepted for type A".into()));
                }
                let word = perm_to_word(p, self.sys.rank()).ok_or_else(|| {
                    CliError::Usage(format!(
                        "--perm: '{p}' is not a permutation of 1..{}",
                        self.sys.rank() + 1
                    ))
                })?;
                Ok(self.sys.normalize(&word)?)
            }
            (None, None) => Err(CliError::Usage("--w is required".into())),
        }
    }

    fn genset(&self, text: &str, flag: &str) -> CliResult<GenSet> {
        self.sys.parse_genset(text).map_err(|e| match e {
            Error::UnknownGenerator(g) => CliError::Usage(format!("{flag}: unknown generator '{g}'")),
            other => CliError::Domain(other),
        })
    }

    fn len(&self, arg: &WArg) -> CliResult<Output> {
        let w = self.w(arg)?;
        let text = format!("{} (length {})\n", self.fmt(&w), w.length());
        Ok((text, json!({ "w": self.fmt(&w), "length": w.length() })))
    }

    fn leq(&self, u: &str, arg: &WArg) -> CliResult<Output> {
        let u = self.element(u, "--u")?;
        let w = self.w(arg)?;
        let result = leq(self.sys, &u, &w);
        let text = format!("{} <= {}: {}\n", self.fmt(&u), self.fmt(&w), result);
        Ok((text, json!({ "u": self.fmt(&u), "w": self.fmt(&w), "leq": result })))
    }

    fn interval(&self, arg: &WArg) -> CliResult<Output> {
        let w = self.w(arg)?;
        let interval = lower_interval(self.sys, &w)?;
        let mut text = format!("[e,{}]: {} elements\n", self.fmt(&w), interval.len());
        for (k, &n) in interval.rank_sizes.iter().enumerate() {
            let names: Vec<String> = interval.rank(k).iter().map(|m| self.fmt(m)).collect();
            let _ = writeln!(text, "  length {k} ({n}): {}", names.join(" "));
        }
        let members: Vec<String> = interval.members.iter().map(|m| self.fmt(m)).collect();
        Ok((
            text,
            json!({ "w": self.fmt(&w), "members": members, "rank_sizes": interval.rank_sizes }),
        ))
    }

    fn covers(&self, arg: &WArg) -> CliResult<Output> {
        let w = self.w(arg)?;
        let cs: Vec<String> = covers(self.sys, &w)?.iter().map(|c| self.fmt(c)).collect();
        let text = format!("covers of {}: {}\n", self.fmt(&w), cs.join(" "));
        Ok((text, json!({ "w": self.fmt(&w), "covers": cs })))
    }

    fn poincare(&self, arg: &WArg) -> CliResult<Output> {
        let w = self.w(arg)?;
        let p = poincare(self.sys, &w)?;
        Ok((format!("{p}\n"), json!({ "w": self.fmt(&w), "poincare": Self::poly_json(&p) })))
    }

    fn poincare_rel(&self, arg: &WArg, j: &str) -> CliResult<Output> {
        let w = self.w(arg)?;
        let j = self.genset(j, "--J")?;
        let p = relative_poincare(self.sys, &w, j)?;
        Ok((
            format!("{p}\n"),
            json!({ "w": self.fmt(&w), "J": self.set_json(j), "poincare": Self::poly_json(&p) }),
        ))
    }

    fn decompose(&self, arg: &WArg, j: &str, side: SideArg) -> CliResult<Output> {
        let w = self.w(arg)?;
        let j = self.genset(j, "--J")?;
        let side = match side {
            SideArg::Right => Side::Right,
            SideArg::Left => Side::Left,
        };
        let d = decompose(self.sys, &w, j, side);
        let (v, u) = (self.fmt(&d.v), self.fmt(&d.u));
        let text = match side {
            Side::Right => format!("{} = ({v})({u})  [v in W^J, u in W_J]\n", self.fmt(&w)),
            Side::Left => format!("{} = ({u})({v})  [u in W_J, v in W_J\\W]\n", self.fmt(&w)),
        };
        let side_name = if side == Side::Right { "right" } else { "left" };
        Ok((
            text,
            json!({ "w": self.fmt(&w), "J": self.set_json(j), "side": side_name, "v": v, "u": u }),
        ))
    }

    fn coset_rep(&self, arg: &WArg, j: &str) -> CliResult<Output> {
        let w = self.w(arg)?;
        let j = self.genset(j, "--J")?;
        let x = coset_rep(self.sys, &w, j);
        Ok((
            format!("{}\n", self.fmt(&x)),
            json!({ "w": self.fmt(&w), "J": self.set_json(j), "rep": self.fmt(&x) }),
        ))
    }

    fn trace_text(&self, r: &CosetMaxResult) -> String {
        let mut text = String::new();
        for level in &r.trace {
            let _ = writeln!(
                text,
                "  x={} D_L(x)={} w=u·v=({})·({}) J'={} s={} q=q'⋆(s·q'')={}⋆({}·{})={}",
                self.fmt(&level.x),
                self.fmt_set(level.left_descents_x),
                self.fmt(&level.u),
                self.fmt(&level.v),
                self.fmt_set(level.j_prime),
                self.sys.names()[level.s],
                self.fmt(&level.q_prime),
                self.sys.names()[level.s],
                self.fmt(&level.q_double_prime),
                self.fmt(&level.q),
            );
        }
        text
    }

    fn trace_json(&self, r: &CosetMaxResult) -> Value {
        Value::Array(
            r.trace
                .iter()
                .map(|level| {
                    json!({
                        "w": self.fmt(&level.w),
                        "x": self.fmt(&level.x),
                        "D_L(x)": self.set_json(level.left_descents_x),
                        "u": self.fmt(&level.u),
                        "v": self.fmt(&level.v),
                        "J'": self.set_json(level.j_prime),
                        "s": self.sys.names()[level.s],
                        "q'": self.fmt(&level.q_prime),
                        "q''": self.fmt(&level.q_double_prime),
                        "q": self.fmt(&level.q),
                    })
                })
                .collect(),
        )
    }

    fn max_coset(&self, arg: &WArg, x: &str, j: &str) -> CliResult<Output> {
        let w = self.w(arg)?;
        let x = self.element(x, "--x")?;
        let j = self.genset(j, "--J")?;
        let r = max_in_coset(self.sys, &w, &x, j)?;
        let mut text = format!(
            "w = {}\nx = {}\nJ = {}\nq = {}\nm = {}\n",
            self.fmt(&w),
            self.fmt(&x),
            self.fmt_set(j),
            self.fmt(&r.q),
            self.fmt(&r.m)
        );
        if !r.trace.is_empty() {
            text.push_str("trace:\n");
            text.push_str(&self.trace_text(&r));
        }
        Ok((
            text,
            json!({
                "w": self.fmt(&w),
                "x": self.fmt(&x),
                "J": self.set_json(j),
                "q": self.fmt(&r.q),
                "m": self.fmt(&r.m),
                "trace": self.trace_json(&r),
            }),
        ))
    }

    fn mj_table(&self, arg: &WArg, j: &str) -> CliResult<Output> {
        let w = self.w(arg)?;
        let j = self.genset(j, "--J")?;
        let set = shifted_max_set(self.sys, &w, j)?;
        let rows: Vec<(String, String, String)> = set
            .pairs
            .iter()
            .map(|(x, m)| {
                let q = self.sys.multiply(x, m)?;
                Ok((self.fmt(x), self.fmt(&q), self.fmt(m)))
            })
            .collect::<coxbruhat::Result<_>>()?;
        let wx = rows.iter().map(|r| r.0.len()).max().unwrap_or(1).max(1);
        let wq = rows.iter().map(|r| r.1.len()).max().unwrap_or(1).max(1);
        let mut text = format!("w = {}\nJ = {}\n", self.fmt(&w), self.fmt_set(j));
        let _ = writeln!(text, "{:<wx$}  {:<wq$}  m_J(w,x)", "x", "q");
        for (x, q, m) in &rows {
            let _ = writeln!(text, "{x:<wx$}  {q:<wq$}  {m}");
        }
        let json_rows: Vec<Value> = rows
            .iter()
            .map(|(x, q, m)| json!({ "x": x, "q": q, "m": m }))
            .collect();
        Ok((
            text,
            json!({ "w": self.fmt(&w), "J": self.set_json(j), "rows": json_rows }),
        ))
    }

    fn max_set(&self, arg: &WArg, j: &str) -> CliResult<Output> {
        let w = self.w(arg)?;
        let j = self.genset(j, "--J")?;
        let set = shifted_max_set(self.sys, &w, j)?;
        let values: Vec<String> = set.values.iter().map(|m| self.fmt(m)).collect();
        let text = format!("M_J(w) = {{{}}}\n", values.join(", "));
        Ok((
            text,
            json!({ "w": self.fmt(&w), "J": self.set_json(j), "values": values }),
        ))
    }

    fn rel_max(&self, arg: &WArg, x: &str, j: &str, k: &str, label: &str) -> CliResult<Output> {
        let w = self.w(arg)?;
        let x = self.element(x, "--x")?;
        let j = self.genset(j, "--J")?;
        let k = self.genset(k, "--K")?;
        let r = max_in_relative_coset(self.sys, &w, &x, j, k)?;
        let text = format!(
            "w = {}\nx = {}\nJ = {}\nK = {}\nq = {}\n{label} = {}\n",
            self.fmt(&w),
            self.fmt(&x),
            self.fmt_set(j),
            self.fmt_set(k),
            self.fmt(&r.q),
            self.fmt(&r.m)
        );
        Ok((
            text,
            json!({
                "w": self.fmt(&w),
                "x": self.fmt(&x),
                "J": self.set_json(j),
                "K": self.set_json(k),
                "q": self.fmt(&r.q),
                "m": self.fmt(&r.m),
            }),
        ))
    }

    fn bp_text(&self, r: &BPReport) -> String {
        let mut text = format!(
            "w = {}\nJ = {}\nv = {}\nu = {}\nu_max = {}\n",
            self.fmt(&r.w),
            self.fmt_set(r.j),
            self.fmt(&r.v),
            self.fmt(&r.u),
            self.fmt(&r.u_max)
        );
        match &r.factorization {
            Some((pv, pu)) => {
                let _ = writeln!(text, "BP");
                let _ = writeln!(text, "P_w = P^J_v · P_u = ({pv})({pu})");
            }
            None => {
                let _ = writeln!(text, "not BP");
            }
        }
        text
    }

    fn bp_json(&self, r: &BPReport) -> Value {
        json!({
            "w": self.fmt(&r.w),
            "J": self.set_json(r.j),
            "v": self.fmt(&r.v),
            "u": self.fmt(&r.u),
            "u_max": self.fmt(&r.u_max),
            "is_bp": r.is_bp,
            "factorization": r.factorization.as_ref().map(|(pv, pu)| {
                json!({ "P^J_v": Self::poly_json(pv), "P_u": Self::poly_json(pu) })
            }),
        })
    }

    fn bp(&self, arg: &WArg, j: &str) -> CliResult<Output> {
        let w = self.w(arg)?;
        let j = self.genset(j, "--J")?;
        let r = bp_report(self.sys, &w, j)?;
        Ok((self.bp_text(&r), self.bp_json(&r)))
    }

    fn bp_scan(&self, arg: &WArg) -> CliResult<Output> {
        let w = self.w(arg)?;
        let mut text = format!("w = {}\n", self.fmt(&w));
        let mut rows = Vec::new();
        for j in self.sys.all_generators().subsets() {
            let r = bp_report(self.sys, &w, j)?;
            let _ = writeln!(
                text,
                "J={} v={} u={} u_max={} {}",
                self.fmt_set(j),
                self.fmt(&r.v),
                self.fmt(&r.u),
                self.fmt(&r.u_max),
                if r.is_bp { "BP" } else { "not BP" }
            );
            rows.push(self.bp_json(&r));
        }
        Ok((text, json!({ "w": self.fmt(&w), "rows": rows })))
    }

    fn decomposition_text(&self, d: &PoincareDecomposition) -> String {
        let mut text = format!("w = {}\nJ = {}\n", self.fmt(&d.w), self.fmt_set(d.j));
        let poly = if let Some(k) = d.k {
            let _ = writeln!(text, "K = {}", self.fmt_set(k));
            "P^J"
        } else {
            "P"
        };
        for t in &d.terms {
            let _ = writeln!(
                text,
                "  x={} t^{} · {poly}_{{{}}} = t^{}({})",
                self.fmt(&t.x),
                t.shift,
                self.fmt(&t.m),
                t.shift,
                t.factor
            );
        }
        let _ = writeln!(text, "{poly}_w = {}", d.factored());
        let _ = writeln!(text, "    = {}", d.total);
        if let Some((a, b)) = &d.factorization {
            let _ = writeln!(text, "    = ({a})({b})");
        }
        text
    }

    fn decomposition_json(&self, d: &PoincareDecomposition) -> Value {
        let terms: Vec<Value> = d
            .terms
            .iter()
            .map(|t| {
                json!({
                    "x": self.fmt(&t.x),
                    "shift": t.shift,
                    "m": self.fmt(&t.m),
                    "factor": Self::poly_json(&t.factor),
                })
            })
            .collect();
        json!({
            "w": self.fmt(&d.w),
            "J": self.set_json(d.j),
            "K": d.k.map(|k| self.set_json(k)),
            "terms": terms,
            "factored": d.factored(),
            "total": Self::poly_json(&d.total),
            "factorization": d.factorization.as_ref().map(|(a, b)| json!([Self::poly_json(a), Self::poly_json(b)])),
        })
    }

    fn poincare_decomp(&self, arg: &WArg, j: &str, k: Option<&str>) -> CliResult<Output> {
        let w = self.w(arg)?;
        let j = self.genset(j, "--J")?;
        let d = match k {
            Some(k) => {
                let k = self.genset(k, "--K")?;
                relative_decompose_poincare(self.sys, &w, j, k)?
            }
            None => decompose_poincare(self.sys, &w, j)?,
        };
        Ok((self.decomposition_text(&d), self.decomposition_json(&d)))
    }

    fn hasse(&self, arg: &WArg, j: Option<&str>, format: Format) -> CliResult<Output> {
        let w = self.w(arg)?;
        let j = j.map(|j| self.genset(j, "--J")).transpose()?;
        let interval = lower_interval(self.sys, &w)?;
        let dot = hasse_dot(self.sys, &interval, j);
        if format != Format::Json {
            return Ok((dot, Value::Null));
        }
        let mut reps: Vec<Element> = match j {
            Some(j) => interval.members.iter().map(|m| coset_rep(self.sys, m, j)).collect(),
            None => vec![Element::identity()],
        };
        reps.sort();
        reps.dedup();
        let nodes: Vec<Value> = interval
            .members
            .iter()
            .map(|m| {
                let rep = j.map(|j| coset_rep(self.sys, m, j)).unwrap_or_default_identity();
                let idx = reps.binary_search(&rep).unwrap_or(0);
                json!({
                    "label": self.fmt(m),
                    "coset": self.fmt(&rep),
                    "color": PALETTE[idx % PALETTE.len()],
                })
            })
            .collect();
        let edges: Vec<Value> = interval
            .cover_edges(self.sys)
            .iter()
            .map(|(a, b)| json!([self.fmt(a), self.fmt(b)]))
            .collect();
        Ok((
            dot,
            json!({ "w": self.fmt(&w), "J": j.map(|j| self.set_json(j)), "nodes": nodes, "edges": edges }),
        ))
    }

    fn verify(&self, max_length: Option<usize>) -> CliResult<Output> {
        let elements = match max_length {
            Some(n) => self.sys.elements_up_to(n)?,
            None => match self.sys.all_elements() {
                Ok(all) if all.len() <= 2000 => all,
                _ => self.sys.elements_up_to(4)?,
            },
        };
        let report = sweep_coset_max(self.sys, &elements);
        let mut text = format!(
            "checked {} triples over {} elements: {} failures\n",
            report.triples,
            elements.len(),
            report.failures.len()
        );
        for f in &report.failures {
            let _ = writeln!(text, "  {f}");
        }
        if !report.passed() {
            return Err(CliError::Domain(Error::InternalAssertionFailed(format!(
                "{} sweep failures; first: {}",
                report.failures.len(),
                report.failures[0]
            ))));
        }
        Ok((
            text,
            json!({
                "elements": elements.len(),
                "triples": report.triples,
                "failures": report.failures,
            }),
        ))
    }
}

trait OrIdentity {
    fn unwrap_or_default_identity(self) -> Element;
}

impl OrIdentity for Option<Element> {
    fn unwrap_or_default_identity(self) -> Element {
        self.unwrap_or_else(Element::identity)
    }
}
