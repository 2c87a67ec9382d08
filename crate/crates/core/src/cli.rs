//! Command-line front end.
//!
//! Every command prints one line of compact JSON (or CSV where supported).
//! Exit codes: 0 on success, 2 on malformed or invalid input, 3 when an
//! enumeration bound is exceeded. Bounds can be raised through the
//! `BURNSIDE_MAX_CANDIDATES` environment variable.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::abelian::{wedge_equivalent, AbelianError, AbelianGroup, Character};
use crate::bng::{BnGElement, BnGError, BnGPresentation, Limits};
use crate::groups::{FiniteGroup, GroupError, GroupSpec, SubgroupRef};
use crate::relations::{expand_b2, expand_b2_raw, expand_prop46, relation_rows, RelationError, Vanishing};
use crate::symbols::{canonicalize_symbol, FieldLabel, Symbol, SymbolError, SymbolSum};
use crate::zlinalg::{decimal_vec, row_space_equal, CokernelInvariants};

pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SIZE: i32 = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Size(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Size(_) => EXIT_SIZE,
        }
    }

    fn input(field: &str, msg: impl std::fmt::Display) -> Self {
        CliError::Input(format!("{field}: {msg}"))
    }
}

impl From<BnGError> for CliError {
    fn from(e: BnGError) -> Self {
        match e {
            BnGError::TooManyCandidates { .. } | BnGError::Group(GroupError::TooLarge { .. }) => {
                CliError::Size(e.to_string())
            }
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        BnGError::from(e).into()
    }
}

impl From<AbelianError> for CliError {
    fn from(e: AbelianError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SymbolError> for CliError {
    fn from(e: SymbolError) -> Self {
        match e {
            SymbolError::Group(g) => g.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<RelationError> for CliError {
    fn from(e: RelationError) -> Self {
        match e {
            RelationError::BnG(b) => b.into(),
            RelationError::Group(g) => g.into(),
            RelationError::Symbol(s) => s.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "burnside", version, about = "Symbol calculus and B_n(G) computations")]
pub struct Cli {
    /// Output format; csv is available for bng-structure only.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Inputs are inline JSON, a file path, or `-` for stdin.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Invariant factors of B_n(G).
    BngStructure {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: usize,
        /// Also report generator and relation counts.
        #[arg(long)]
        details: bool,
    },
    /// Normal form of a class in B_n(G).
    BngReduce {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        class: String,
    },
    /// Whether two classes in B_n(G) coincide.
    BngEqual {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Blow-up expansion of a symbol at weight positions i, j (0-based), or
    /// the iterated expansion on the first J weights.
    Expand {
        #[arg(long)]
        group: String,
        #[arg(long)]
        symbol: String,
        #[arg(long, default_value_t = 0)]
        i: usize,
        #[arg(long, default_value_t = 1)]
        j: usize,
        #[arg(long, value_name = "J")]
        prop46: Option<usize>,
    },
    /// Canonical form of a symbol.
    Canon {
        #[arg(long)]
        group: String,
        #[arg(long)]
        symbol: String,
    },
    /// Compare the row spaces of the j = 2 and all-j relation matrices.
    VerifyProp71 {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: usize,
    },
    /// The blow-up of (<rho^2, sigma>, CxC, (a1, a2)) in the dihedral group
    /// of order 8.
    ExampleD8,
    /// Whether two faithful representations of rank-many characters have
    /// the same wedge invariant.
    Wedge {
        #[arg(long)]
        group: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        gamma: String,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn limits_from_env() -> Result<Limits, CliError> {
    match std::env::var("BURNSIDE_MAX_CANDIDATES") {
        Ok(v) => v
            .trim()
            .parse()
            .map(|max_candidates| Limits { max_candidates })
            .map_err(|e| CliError::input("BURNSIDE_MAX_CANDIDATES", e)),
        Err(_) => Ok(Limits::default()),
    }
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("reports serialize");
    s.push('\n');
    s
}

fn json_only(cli: &Cli, cmd: &str) -> Result<(), CliError> {
    if cli.format == Format::Csv {
        return Err(CliError::input("--format", format!("csv is not supported by {cmd}")));
    }
    Ok(())
}

pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String, CliError> {
    let mut loader = Loader { stdin, used: false };
    let limits = limits_from_env()?;
    match &cli.command {
        Command::BngStructure { group, n, details } => {
            let a = parse_abelian(&loader.load("--group", group)?)?;
            check_n(*n)?;
            let p = BnGPresentation::new(&a, *n, &limits)?;
            let s = p.structure();
            match cli.format {
                Format::Csv => Ok(emit_table(&[TableRow {
                    group: a.name(),
                    n: *n,
                    structure: s,
                }])),
                Format::Json if *details => Ok(json_line(&StructureDetails {
                    free_rank: s.free_rank,
                    torsion: s.torsion,
                    num_generators: p.generators().len(),
                    num_relations: p.relation_matrix().rows(),
                })),
                Format::Json => Ok(json_line(&s)),
            }
        }
        Command::BngReduce { group, n, class } => {
            json_only(cli, "bng-reduce")?;
            let a = parse_abelian(&loader.load("--group", group)?)?;
            check_n(*n)?;
            let x = parse_class("--class", &loader.load("--class", class)?, &a, *n)?;
            let p = BnGPresentation::new(&a, *n, &limits)?;
            let c = p.reduce_class(&x).map_err(|e| tag("--class", e))?;
            Ok(json_line(&ClassReport {
                is_zero: c.is_zero(),
                free: c.free,
                torsion: c.torsion,
                moduli: p.torsion_moduli(),
            }))
        }
        Command::BngEqual { group, n, x, y } => {
            json_only(cli, "bng-equal")?;
            let a = parse_abelian(&loader.load("--group", group)?)?;
            check_n(*n)?;
            let x = parse_class("--x", &loader.load("--x", x)?, &a, *n)?;
            let y = parse_class("--y", &loader.load("--y", y)?, &a, *n)?;
            let p = BnGPresentation::new(&a, *n, &limits)?;
            let cx = p.reduce_class(&x).map_err(|e| tag("--x", e))?;
            let cy = p.reduce_class(&y).map_err(|e| tag("--y", e))?;
            Ok(json_line(&EqualReport { equal: cx == cy }))
        }
        Command::Expand { group, symbol, i, j, prop46 } => {
            json_only(cli, "expand")?;
            let g = parse_group(&loader.load("--group", group)?)?;
            let s = parse_symbol(&loader.load("--symbol", symbol)?, &g)?;
            match prop46 {
                Some(depth) => {
                    let terms = expand_prop46(&g, &s, *depth).map_err(|e| tag_rel("--prop46", e))?;
                    Ok(json_line(&Prop46Report { terms }))
                }
                None => {
                    let r = expand_b2(&g, &s, *i, *j).map_err(|e| tag_rel("--i/--j", e))?;
                    Ok(json_line(&r))
                }
            }
        }
        Command::Canon { group, symbol } => {
            json_only(cli, "canon")?;
            let g = parse_group(&loader.load("--group", group)?)?;
            let s = parse_symbol(&loader.load("--symbol", symbol)?, &g)?;
            Ok(json_line(&canonicalize_symbol(&g, &s)?))
        }
        Command::VerifyProp71 { group, n } => {
            json_only(cli, "verify-prop71")?;
            let a = parse_abelian(&loader.load("--group", group)?)?;
            check_n(*n)?;
            let equal = if *n < 2 {
                // no relations at all
                crate::bng::enumerate_generators(&a, *n, &limits)?;
                true
            } else {
                let two = relation_rows(&a, *n, 2, &limits)?;
                let all = relation_rows(&a, *n, *n, &limits)?;
                row_space_equal(&two, &all).expect("same generator basis")
            };
            Ok(json_line(&Prop71Report { row_spaces_equal: equal }))
        }
        Command::ExampleD8 => {
            json_only(cli, "example-d8")?;
            Ok(json_line(&example_d8()?))
        }
        Command::Wedge { group, beta, gamma } => {
            json_only(cli, "wedge")?;
            let a = parse_abelian(&loader.load("--group", group)?)?;
            let b = parse_chars("--beta", &loader.load("--beta", beta)?, &a)?;
            let c = parse_chars("--gamma", &loader.load("--gamma", gamma)?, &a)?;
            let equivalent = wedge_equivalent(&a, &b, &c).map_err(|e| CliError::input("--beta/--gamma", e))?;
            Ok(json_line(&WedgeReport { equivalent }))
        }
    }
}

fn check_n(n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::input("--n", "must be at least 1"));
    }
    Ok(())
}

fn tag(field: &str, e: BnGError) -> CliError {
    match CliError::from(e) {
        CliError::Input(m) => CliError::input(field, m),
        other => other,
    }
}

fn tag_rel(field: &str, e: RelationError) -> CliError {
    match e {
        RelationError::BadPositions { .. } | RelationError::BadDepth { .. } => {
            CliError::input(field, e)
        }
        e => e.into(),
    }
}

struct Loader<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Loader<'_> {
    /// `(flag, text)`: inline JSON, `-` for stdin, otherwise a file path.
    fn load(&mut self, flag: &str, arg: &str) -> Result<(String, String), CliError> {
        let t = arg.trim_start();
        let text = if arg == "-" {
            if self.used {
                return Err(CliError::input(flag, "stdin already consumed by another input"));
            }
            self.used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError::input(flag, format!("reading stdin: {e}")))?;
            s
        } else if t.starts_with('{') || t.starts_with('[') {
            arg.to_string()
        } else {
            std::fs::read_to_string(arg)
                .map_err(|e| CliError::input(flag, format!("reading {arg}: {e}")))?
        };
        Ok((flag.to_string(), text))
    }
}

fn decode<T: DeserializeOwned>(flag: &str, text: &str) -> Result<T, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        if path == "." {
            CliError::input(flag, e.into_inner())
        } else {
            CliError::input(&format!("{flag}: field `{path}`"), e.into_inner())
        }
    })
}

/// A group either as a tagged description or as bare invariant factors.
fn parse_group((flag, text): &(String, String)) -> Result<FiniteGroup, CliError> {
    let v: Value = decode(flag, text)?;
    let g = if v.get("type").is_some() {
        decode::<GroupSpec>(flag, text)?.build()
    } else {
        let a: AbelianGroup = decode(flag, text)?;
        FiniteGroup::from_abelian(&a)
    };
    g.map_err(|e| match e {
        GroupError::TooLarge { .. } => CliError::Size(e.to_string()),
        e => CliError::input(flag, e),
    })
}

/// The character group of an abelian group input.
fn parse_abelian(input: &(String, String)) -> Result<AbelianGroup, CliError> {
    let (flag, text) = input;
    let v: Value = decode(flag, text)?;
    if v.get("type").is_none() {
        return decode(flag, text);
    }
    let g = parse_group(input)?;
    let all: Vec<usize> = (0..g.order()).collect();
    let h = g.subgroup(&all)?;
    let a = h.characters().map_err(|e| CliError::input(flag, e))?;
    Ok(a.clone())
}

fn parse_symbol((flag, text): &(String, String), g: &FiniteGroup) -> Result<Symbol, CliError> {
    let s: Symbol = decode(flag, text)?;
    s.validated(g).map_err(|e| CliError::input(flag, e))
}

fn parse_chars(flag: &str, (_, text): &(String, String), a: &AbelianGroup) -> Result<Vec<Character>, CliError> {
    let cs: Vec<Character> = decode(flag, text)?;
    for (k, c) in cs.iter().enumerate() {
        a.check(c).map_err(|e| CliError::input(&format!("{flag}: entry {k}"), e))?;
    }
    Ok(cs)
}

#[derive(serde::Deserialize)]
struct ClassTerm {
    generator: Vec<Character>,
    coeff: i64,
}

/// A class is one generator multiset (an array of characters) or a list of
/// `{"generator": …, "coeff": …}` terms.
fn parse_class(flag: &str, input: &(String, String), a: &AbelianGroup, n: usize) -> Result<BnGElement, CliError> {
    let v: Value = decode(flag, &input.1)?;
    let terms: Vec<ClassTerm> = match v.as_array().and_then(|xs| xs.first()) {
        Some(Value::Object(_)) => decode(flag, &input.1)?,
        Some(_) => vec![ClassTerm { generator: decode(flag, &input.1)?, coeff: 1 }],
        None => vec![],
    };
    let mut x = BnGElement::zero();
    for (k, t) in terms.into_iter().enumerate() {
        if t.generator.len() != n {
            return Err(CliError::input(
                &format!("{flag}: term {k}"),
                format!("multiset has {} entries, expected {n}", t.generator.len()),
            ));
        }
        for c in &t.generator {
            a.check(c).map_err(|e| CliError::input(&format!("{flag}: term {k}"), e))?;
        }
        x.add(t.generator, t.coeff);
    }
    Ok(x)
}

#[derive(Serialize)]
struct StructureDetails {
    free_rank: usize,
    #[serde(with = "decimal_vec")]
    torsion: Vec<BigInt>,
    num_generators: usize,
    num_relations: usize,
}

#[derive(Serialize)]
struct ClassReport {
    is_zero: bool,
    #[serde(with = "decimal_vec")]
    free: Vec<BigInt>,
    #[serde(with = "decimal_vec")]
    torsion: Vec<BigInt>,
    #[serde(with = "decimal_vec")]
    moduli: Vec<BigInt>,
}

#[derive(Serialize)]
struct EqualReport {
    equal: bool,
}

#[derive(Serialize)]
struct Prop46Report {
    terms: SymbolSum,
}

#[derive(Serialize)]
struct Prop71Report {
    row_spaces_equal: bool,
}

#[derive(Serialize)]
struct WedgeReport {
    equivalent: bool,
}

/// One line of a structure table.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub group: String,
    pub n: usize,
    pub structure: CokernelInvariants,
}

/// CSV with header `group,n,free_rank,torsion`; torsion is `;`-joined.
pub fn emit_table(rows: &[TableRow]) -> String {
    let mut out = String::from("group,n,free_rank,torsion\n");
    for r in rows {
        let torsion: Vec<String> = r.structure.torsion.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{},{},{},{}", r.group, r.n, r.structure.free_rank, torsion.join(";"));
    }
    out
}

// ---------------------------------------------------------------------------
// The dihedral example

/// A symbol with human-readable labels.
#[derive(Clone, Debug, Serialize)]
pub struct LabeledTerm {
    pub subgroup: String,
    pub elements: Vec<String>,
    pub field: String,
    pub beta: String,
    pub coeff: i64,
    pub symbol: Symbol,
}

#[derive(Clone, Debug, Serialize)]
pub struct Expansion {
    pub theta1: Vec<LabeledTerm>,
    pub theta2: Vec<LabeledTerm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct D8Report {
    pub group: String,
    pub generators: Vec<(String, String)>,
    pub input: LabeledTerm,
    /// Terms as produced by the relation, before (C1)/(C2).
    pub raw: Expansion,
    pub canonical: Expansion,
    pub vanished_by: Vanishing,
    /// The subgroup class `<sigma>` that the second part must land in.
    pub reflection_class: Vec<String>,
    pub matches_expected: bool,
}

const D8_NAMES: [&str; 2] = ["rho", "sigma"];

fn word_name(g: &FiniteGroup, x: usize) -> String {
    let Some(w) = g.word(x) else {
        return format!("g{x}");
    };
    if w.is_empty() {
        return "e".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut k = 0;
    while k < w.len() {
        let run = w[k..].iter().take_while(|&&c| c == w[k]).count();
        let name = D8_NAMES.get(w[k]).copied().unwrap_or("?");
        parts.push(if run == 1 { name.to_string() } else { format!("{name}^{run}") });
        k += run;
    }
    parts.join(" ")
}

/// Names the group by a greedy generating set of shortest words.
fn subgroup_name(g: &FiniteGroup, h: &[usize]) -> String {
    let mut order: Vec<usize> = h.to_vec();
    order.sort_by_key(|&x| (g.word(x).map_or(0, <[usize]>::len), x));
    let mut gens = Vec::new();
    let mut span = vec![g.identity()];
    for x in order {
        if !span.contains(&x) {
            gens.push(x);
            span = g.generated_subgroup(&gens).expect("subset of a subgroup").elements().to_vec();
        }
    }
    let names: Vec<String> = gens.iter().map(|&x| word_name(g, x)).collect();
    format!("<{}>", names.join(", "))
}

/// Writes `chi` as a combination of named dual characters.
fn char_name(g: &FiniteGroup, h: &SubgroupRef, basis: &[usize], names: &[&str], chi: &Character) -> String {
    let st = h.structure().expect("abelian");
    let e = g.exponent_lcm();
    let mut parts = Vec::new();
    for (&b, name) in basis.iter().zip(names) {
        let ord = g.element_order(b) as u64;
        let c = st.evaluate(e, chi, b) * ord / e;
        match c {
            0 => {}
            1 => parts.push(name.to_string()),
            c => parts.push(format!("{c}{name}")),
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

fn label(g: &FiniteGroup, s: &Symbol, coeff: i64, named: &(SubgroupRef, Vec<usize>)) -> LabeledTerm {
    let h = s.subgroup_ref(g).expect("valid symbol");
    let (basis, names): (Vec<usize>, Vec<&str>) = if h == named.0 {
        (named.1.clone(), vec!["a1", "a2"])
    } else {
        // cyclic: the least element of maximal order generates
        let gen = h
            .elements()
            .iter()
            .copied()
            .max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x)))
            .expect("nonempty");
        (vec![gen], vec!["a"])
    };
    let mut betas: Vec<String> = s.beta().iter().map(|c| char_name(g, &h, &basis, &names, c)).collect();
    betas.sort_by(|x, y| (x.len(), x).cmp(&(y.len(), y)));
    let subgroup = if h == named.0 {
        let gens: Vec<String> = named.1.iter().map(|&x| word_name(g, x)).collect();
        format!("<{}>", gens.join(", "))
    } else {
        subgroup_name(g, h.elements())
    };
    LabeledTerm {
        subgroup,
        elements: h.elements().iter().map(|&x| word_name(g, x)).collect(),
        field: s.field().to_string(),
        beta: format!("({})", betas.join(", ")),
        coeff,
        symbol: s.clone(),
    }
}

/// Expands `(<rho^2, sigma>, CxC, (a1, a2))` in `D8 = <rho, sigma>` and
/// checks the result against the expected three terms.
pub fn example_d8() -> Result<D8Report, CliError> {
    let g = FiniteGroup::from_generators(4, &[vec![1, 2, 3, 0], vec![2, 1, 0, 3]])?;
    let (rho, sigma) = (1, 2);
    let rho2 = g.mul(rho, rho);
    let h = g.generated_subgroup(&[rho2, sigma])?;
    let a = h.characters()?.clone();
    let dual = h
        .structure()?
        .dual_characters(&g, &[rho2, sigma])
        .expect("rho^2 and sigma split H");
    let (a1, a2) = (dual[0].clone(), dual[1].clone());
    let k = FieldLabel::atom("CxC", 0, 1, 2);
    let s = Symbol::new(&h, k.clone(), vec![a1.clone(), a2.clone()], 2)?;
    let named = (h.clone(), vec![rho2, sigma]);

    let raw = expand_b2_raw(&g, &s, 0, 1)?;
    let report = expand_b2(&g, &s, 0, 1)?;
    let label_sum = |x: &SymbolSum| -> Vec<LabeledTerm> {
        x.iter().map(|(t, c)| label(&g, t, c, &named)).collect()
    };

    let mut expected1 = SymbolSum::zero();
    for beta in [vec![a1.clone(), a.add(&a1, &a2)], vec![a2.clone(), a.add(&a1, &a2)]] {
        expected1.add_symbol(&g, &Symbol::new(&h, k.clone(), beta, 2)?, 1)?;
    }
    let refl = g.generated_subgroup(&[sigma])?;
    let (refl_rep, _) = g.class_representative(refl.elements());
    let theta2_ok = report.theta2.len() == 1
        && report.theta2.iter().all(|(t, c)| {
            c == 1 && t.subgroup() == refl_rep.as_slice() && t.beta().len() == 1
        });
    let raw_ok = raw.theta1.len() == 2
        && raw.theta2.as_ref().is_some_and(|t| {
            t.subgroup() == g.generated_subgroup(&[g.mul(rho2, sigma)]).map(|x| x.elements().to_vec()).unwrap_or_default()
        });

    Ok(D8Report {
        group: "D8".into(),
        generators: vec![
            ("rho".into(), "(0 1 2 3)".into()),
            ("sigma".into(), "(0 2)".into()),
        ],
        input: label(&g, &s, 1, &named),
        raw: Expansion {
            theta1: raw.theta1.iter().map(|t| label(&g, t, 1, &named)).collect(),
            theta2: raw.theta2.iter().map(|t| label(&g, t, 1, &named)).collect(),
        },
        canonical: Expansion {
            theta1: label_sum(&report.theta1),
            theta2: label_sum(&report.theta2),
        },
        vanished_by: report.vanished_by,
        reflection_class: refl_rep.iter().map(|&x| word_name(&g, x)).collect(),
        matches_expected: report.theta1 == expected1 && theta2_ok && raw_ok,
    })
}
