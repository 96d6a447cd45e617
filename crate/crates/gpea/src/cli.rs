//! Batch front end: parse and serialize model files, run validators,
//! computations, decompositions, enumeration and the law suite, and emit
//! human- or machine-readable reports.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid model, 3 law failure.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::algebra::{Elem, FiniteGpea, SumTable};
use crate::axioms;
use crate::center;
use crate::construct;
use crate::cover;
use crate::exocenter::ExoMap;
use crate::laws;
use crate::set::ElementSet;
use crate::typetheory;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_MODEL: i32 = 2;
pub const EXIT_LAW_FAILURE: i32 = 3;

#[derive(Debug, Error)]
pub enum ModelParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Table {
        line: usize,
        #[source]
        source: crate::algebra::TableError,
    },
    #[error("table violates the axioms:\n{0}")]
    Invalid(axioms::ViolationReport),
}

/// Parse the textual model format: a `gpea <n>` header, an optional
/// `labels` line, and `sum <i> <j> <k>` lines. Zero sums are implicit;
/// duplicates must agree; `#` starts a comment line.
pub fn parse_model(text: &str) -> Result<FiniteGpea, ModelParseError> {
    let syntax = |line: usize, message: String| ModelParseError::Syntax { line, message };
    let mut header: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut sums: Vec<(Elem, Elem, Elem)> = Vec::new();
    let mut table = SumTable::zeros_only(1).expect("placeholder");

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().expect("nonempty line");
        match keyword {
            "gpea" => {
                if header.is_some() {
                    return Err(syntax(line_no, "duplicate header".into()));
                }
                let arg = words
                    .next()
                    .ok_or_else(|| syntax(line_no, "expected: gpea <n>".into()))?;
                let n: usize = arg
                    .parse()
                    .map_err(|_| syntax(line_no, format!("bad element count {arg:?}")))?;
                table = SumTable::zeros_only(n)
                    .map_err(|source| ModelParseError::Table { line: line_no, source })?;
                header = Some(n);
            }
            "labels" => {
                let n = header.ok_or_else(|| syntax(line_no, "labels before header".into()))?;
                let names: Vec<String> = words.map(str::to_string).collect();
                if names.len() != n {
                    return Err(syntax(
                        line_no,
                        format!("expected {n} labels, got {}", names.len()),
                    ));
                }
                labels = Some(names);
            }
            "sum" => {
                let n = header.ok_or_else(|| syntax(line_no, "sum before header".into()))?;
                let mut parse_elem = |what: &str| -> Result<Elem, ModelParseError> {
                    let word = words.next().ok_or_else(|| {
                        syntax(line_no, format!("expected: sum <i> <j> <k>, missing {what}"))
                    })?;
                    word.parse()
                        .map_err(|_| syntax(line_no, format!("bad element {word:?}")))
                };
                let (a, b, v) = (parse_elem("left")?, parse_elem("right")?, parse_elem("value")?);
                sums.push((a, b, v));
                table = SumTable::from_sums(n, &sums)
                    .map_err(|source| ModelParseError::Table { line: line_no, source })?;
            }
            other => {
                return Err(syntax(line_no, format!("unknown directive {other:?}")));
            }
        }
    }

    if header.is_none() {
        return Err(syntax(0, "missing gpea header".into()));
    }
    let model = FiniteGpea::from_table(&table).map_err(ModelParseError::Invalid)?;
    match labels {
        Some(names) => model.with_labels(names).map_err(|message| syntax(0, message)),
        None => Ok(model),
    }
}

/// Canonical serialization: sorted sum lines, implicit zero sums omitted.
/// Parsing the output reproduces the model exactly.
pub fn serialize_model(e: &FiniteGpea) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "gpea {}", e.order());
    if let Some(labels) = e.labels() {
        let _ = writeln!(out, "labels {}", labels.join(" "));
    }
    for (a, b, v) in e.table().nonzero_sums() {
        let _ = writeln!(out, "sum {a} {b} {v}");
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClosureOp {
    Gamma,
    Image,
    Down,
    Prime,
    Doubleprime,
}

#[derive(Parser)]
#[command(
    name = "gpea",
    about = "finite generalized pseudoeffect algebras: validate, compute, decompose, verify",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Accepted for script compatibility; all output is deterministic.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a model file against the axioms.
    Validate { file: String },
    /// Summary: order, top, commutativity, exocenter and center sizes.
    Info { file: String },
    /// All exocenter maps with their images.
    Exocenter { file: String },
    /// Central elements, their summand maps, and the unit.
    Center { file: String },
    /// Exocentral covers and the set of distinct covers.
    Covers { file: String },
    /// Apply a closure operator to a set of elements.
    Tdclose {
        file: String,
        /// Set spec: list:i,j | labels:a,b | center | atoms | all |
        /// pea-class:commutative
        #[arg(long = "Q")]
        q: String,
        #[arg(long, value_enum)]
        op: ClosureOp,
    },
    /// Type-decompose along one or two type-determining sets.
    Decompose {
        file: String,
        #[arg(long = "K")]
        k: String,
        #[arg(long = "F")]
        f: Option<String>,
        /// Close non-type-determining inputs instead of rejecting them.
        #[arg(long)]
        close: bool,
    },
    /// Enumerate all models of one order up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Raise the enumeration order cap.
        #[arg(long, default_value_t = construct::DEFAULT_ORDER_CAP)]
        cap: usize,
    },
    /// Run the law suite over a model file or the enumerated corpus.
    Laws {
        file: Option<String>,
        /// Run over every enumerated model of order up to this bound.
        #[arg(long)]
        corpus: Option<usize>,
        /// Comma-separated law identifiers (default: all).
        #[arg(long, value_delimiter = ',')]
        law: Vec<String>,
        /// Per-law wall-clock limit in seconds (default: no limit).
        #[arg(long)]
        per_law_timeout: Option<u64>,
    },
}

/// Entry point used by the binary and by tests; returns the exit code.
pub fn run(args: &[String], out: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = write!(out, "{err}");
            return if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(CommandError { code, message }) => {
            let _ = writeln!(out, "error: {message}");
            code
        }
    }
}

struct CommandError {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> CommandError {
    CommandError { code: EXIT_USAGE, message: message.into() }
}

fn invalid(message: impl Into<String>) -> CommandError {
    CommandError { code: EXIT_INVALID_MODEL, message: message.into() }
}

fn load_model(path: &str) -> Result<FiniteGpea, CommandError> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| invalid(format!("cannot read {path}: {err}")))?;
    parse_model(&text).map_err(|err| invalid(format!("{path}: {err}")))
}

fn parse_set_spec(spec: &str, e: &FiniteGpea) -> Result<ElementSet, CommandError> {
    let n = e.order();
    if let Some(ids) = spec.strip_prefix("list:") {
        let mut set = ElementSet::empty(n);
        if !ids.is_empty() {
            for part in ids.split(',') {
                let x: Elem = part
                    .parse()
                    .map_err(|_| usage(format!("bad element {part:?} in set spec")))?;
                if x >= n {
                    return Err(usage(format!("element {x} out of range 0..{n}")));
                }
                set.insert(x);
            }
        }
        return Ok(set);
    }
    if let Some(names) = spec.strip_prefix("labels:") {
        let labels = e.labels().ok_or_else(|| usage("model has no labels line"))?;
        let mut set = ElementSet::empty(n);
        for name in names.split(',') {
            let x = labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| usage(format!("unknown label {name:?}")))?;
            set.insert(x);
        }
        return Ok(set);
    }
    match spec {
        "center" => Ok(center::central_elements(e)),
        "atoms" => Ok(construct::atoms(e)),
        "all" => Ok(ElementSet::full(n)),
        "pea-class:commutative" => Ok(typetheory::tdset_from_pea_class(e, axioms::is_commutative)),
        other => Err(usage(format!("unknown set spec {other:?}"))),
    }
}

fn render_set(e: &FiniteGpea, s: &ElementSet) -> String {
    let names: Vec<String> = s.iter().map(|x| e.label(x)).collect();
    format!("{{{}}}", names.join(","))
}

fn machine_set(s: &ElementSet) -> String {
    if s.is_empty() {
        "-".to_string()
    } else {
        s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn machine_map(m: &ExoMap) -> String {
    m.values().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn emit(out: &mut dyn Write, s: String) {
    let _ = writeln!(out, "{s}");
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CommandError> {
    let machine = cli.format == Format::Machine;
    match &cli.command {
        Command::Validate { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|err| invalid(format!("cannot read {file}: {err}")))?;
            match parse_model(&text) {
                Ok(e) => {
                    if machine {
                        emit(out, format!("record=validate status=valid n={}", e.order()));
                    } else {
                        emit(out, format!("valid model on {} elements", e.order()));
                    }
                    Ok(EXIT_OK)
                }
                Err(ModelParseError::Invalid(report)) => {
                    if machine {
                        for v in &report.violations {
                            emit(
                                out,
                                format!(
                                    "record=violation axiom={} witness={}",
                                    v.axiom.tag(),
                                    v.witness
                                        .iter()
                                        .map(|x| x.to_string())
                                        .collect::<Vec<_>>()
                                        .join(",")
                                ),
                            );
                        }
                        emit(out, "record=validate status=invalid".to_string());
                    } else {
                        emit(out, format!("invalid model:\n{report}"));
                    }
                    Ok(EXIT_INVALID_MODEL)
                }
                Err(err) => Err(invalid(format!("{file}: {err}"))),
            }
        }
        Command::Info { file } => {
            let e = load_model(file)?;
            let top = axioms::top_of(&e);
            let gamma = center::central_elements(&e);
            let gex = crate::exocenter::exocenter(&e);
            let unit = center::center_unit(&e);
            let atoms = construct::atoms(&e);
            if machine {
                emit(
                    out,
                    format!(
                        "record=info n={} pea={} top={} commutative={} gex={} center={} unit={} atoms={}",
                        e.order(),
                        top.is_some(),
                        top.map_or("-".into(), |t| t.to_string()),
                        axioms::is_commutative(&e),
                        gex.len(),
                        machine_set(&gamma),
                        unit,
                        machine_set(&atoms),
                    ),
                );
            } else {
                emit(out, format!("order:        {}", e.order()));
                match top {
                    Some(t) => {
                        emit(out, format!("top:          {} (pseudoeffect algebra)", e.label(t)))
                    }
                    None => emit(out, "top:          none".to_string()),
                }
                emit(out, format!("commutative:  {}", axioms::is_commutative(&e)));
                emit(out, format!("atoms:        {}", render_set(&e, &atoms)));
                emit(out, format!("exocenter:    {} maps", gex.len()));
                emit(out, format!("center:       {}", render_set(&e, &gamma)));
                emit(out, format!("center unit:  {}", e.label(unit)));
            }
            Ok(EXIT_OK)
        }
        Command::Exocenter { file } => {
            let e = load_model(file)?;
            let gex = crate::exocenter::exocenter(&e);
            for (i, m) in gex.iter().enumerate() {
                if machine {
                    emit(
                        out,
                        format!(
                            "record=exomap index={i} values={} image={}",
                            machine_map(m),
                            machine_set(m.image())
                        ),
                    );
                } else {
                    emit(
                        out,
                        format!(
                            "map {i}: image {} values [{}]",
                            render_set(&e, m.image()),
                            m.values().iter().map(|&v| e.label(v)).collect::<Vec<_>>().join(" ")
                        ),
                    );
                }
            }
            if machine {
                emit(out, format!("record=exocenter size={}", gex.len()));
            } else {
                emit(out, format!("exocenter size: {}", gex.len()));
            }
            Ok(EXIT_OK)
        }
        Command::Center { file } => {
            let e = load_model(file)?;
            let data = center::center_data(&e);
            for (c, m) in &data.pi_of {
                if machine {
                    emit(
                        out,
                        format!(
                            "record=central element={c} image={} values={}",
                            machine_set(m.image()),
                            machine_map(m)
                        ),
                    );
                } else {
                    emit(
                        out,
                        format!(
                            "central {}: summand image {}",
                            e.label(*c),
                            render_set(&e, m.image())
                        ),
                    );
                }
            }
            if machine {
                emit(
                    out,
                    format!("record=center set={} unit={}", machine_set(&data.gamma_set), data.unit),
                );
            } else {
                emit(out, format!("center: {}", render_set(&e, &data.gamma_set)));
                emit(out, format!("unit:   {}", e.label(data.unit)));
            }
            Ok(EXIT_OK)
        }
        Command::Covers { file } => {
            let e = load_model(file)?;
            let system = cover::cover_system(&e);
            for x in e.elements() {
                let g = system.cover(x);
                if machine {
                    emit(
                        out,
                        format!(
                            "record=cover element={x} values={} image={}",
                            machine_map(g),
                            machine_set(g.image())
                        ),
                    );
                } else {
                    emit(
                        out,
                        format!("cover of {}: image {}", e.label(x), render_set(&e, g.image())),
                    );
                }
            }
            let cert = cover::is_cogpea(&e);
            if machine {
                emit(
                    out,
                    format!(
                        "record=covers distinct={} orthocomplete={} families={}",
                        system.theta.len(),
                        cert.holds,
                        cert.families_checked
                    ),
                );
            } else {
                emit(out, format!("distinct covers: {}", system.theta.len()));
                emit(
                    out,
                    format!(
                        "orthocomplete: {} ({} orthogonal families, {} maximal)",
                        cert.holds,
                        cert.families_checked,
                        cert.maximal_families.len()
                    ),
                );
            }
            Ok(if cert.holds { EXIT_OK } else { EXIT_LAW_FAILURE })
        }
        Command::Tdclose { file, q, op } => {
            let e = load_model(file)?;
            let set = parse_set_spec(q, &e)?;
            let result = match op {
                ClosureOp::Gamma => typetheory::closure_gamma(&e, &set),
                ClosureOp::Image => typetheory::gamma_image(&e, &set),
                ClosureOp::Down => typetheory::downset(&e, &set),
                ClosureOp::Prime => typetheory::disjoint_complement(&e, &set),
                ClosureOp::Doubleprime => typetheory::double_complement(&e, &set),
            };
            if machine {
                emit(
                    out,
                    format!(
                        "record=tdclose input={} result={}",
                        machine_set(&set),
                        machine_set(&result)
                    ),
                );
            } else {
                emit(out, format!("input:  {}", render_set(&e, &set)));
                emit(out, format!("result: {}", render_set(&e, &result)));
            }
            Ok(EXIT_OK)
        }
        Command::Decompose { file, k, f, close } => {
            let e = load_model(file)?;
            let k_set = resolve_td(&e, k, *close, "K", machine, out)?;
            let ctx = typetheory::td_context(&e, &k_set).expect("set was closed or verified");
            report_context(&e, "K", &ctx, machine, out);
            let (p1, p2, p3) = typetheory::fundamental_decomposition(&e, &ctx);
            if machine {
                emit(
                    out,
                    format!(
                        "record=fundamental pi1={} pi2={} pi3={}",
                        machine_map(&p1),
                        machine_map(&p2),
                        machine_map(&p3)
                    ),
                );
            } else {
                emit(
                    out,
                    format!(
                        "fundamental split: typed {}, locally typed {}, untyped {}",
                        render_set(&e, p1.image()),
                        render_set(&e, p2.image()),
                        render_set(&e, p3.image())
                    ),
                );
            }
            for (i, pi) in crate::exocenter::exocenter(&e).iter().enumerate() {
                let flags = ctx.classify(&e, pi);
                if machine {
                    emit(
                        out,
                        format!(
                            "record=flags index={i} type={} locally={} purely={} properly={}",
                            flags.type_k, flags.locally_type_k, flags.purely_non_k, flags.properly_non_k
                        ),
                    );
                } else {
                    emit(
                        out,
                        format!(
                            "map {i} ({}): type={} locally={} purely-non={} properly-non={}",
                            render_set(&e, pi.image()),
                            flags.type_k,
                            flags.locally_type_k,
                            flags.purely_non_k,
                            flags.properly_non_k
                        ),
                    );
                }
            }
            if let Some(f_spec) = f {
                let f_set = resolve_td(&e, f_spec, *close, "F", machine, out)?;
                if !k_set.is_subset(&f_set) {
                    return Err(usage("K is not contained in F"));
                }
                let fctx = typetheory::td_context(&e, &f_set).expect("set was closed or verified");
                report_context(&e, "F", &fctx, machine, out);
                let report = typetheory::type_i_ii_iii(&e, &k_set, &f_set)
                    .map_err(|err| usage(err.to_string()))?;
                if machine {
                    emit(
                        out,
                        format!(
                            "record=types piI={} piII={} piIII={} piIF={} piInotF={} piIIF={} piIInotF={}",
                            machine_map(&report.pi_i),
                            machine_map(&report.pi_ii),
                            machine_map(&report.pi_iii),
                            machine_map(&report.pi_i_f),
                            machine_map(&report.pi_i_not_f),
                            machine_map(&report.pi_ii_f),
                            machine_map(&report.pi_ii_not_f)
                        ),
                    );
                } else {
                    emit(out, format!("type one:   {}", render_set(&e, report.pi_i.image())));
                    emit(out, format!("type two:   {}", render_set(&e, report.pi_ii.image())));
                    emit(out, format!("type three: {}", render_set(&e, report.pi_iii.image())));
                    emit(
                        out,
                        format!(
                            "refinements: I_F {}, I_notF {}, II_F {}, II_notF {}",
                            render_set(&e, report.pi_i_f.image()),
                            render_set(&e, report.pi_i_not_f.image()),
                            render_set(&e, report.pi_ii_f.image()),
                            render_set(&e, report.pi_ii_not_f.image())
                        ),
                    );
                }
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate { order, cap } => {
            let models = construct::enumerate_gpeas_capped(*order, *cap)
                .map_err(|err| usage(err.to_string()))?;
            for (i, m) in models.iter().enumerate() {
                if machine {
                    let sums = m
                        .table()
                        .nonzero_sums()
                        .iter()
                        .map(|(a, b, v)| format!("{a},{b},{v}"))
                        .collect::<Vec<_>>()
                        .join(";");
                    let sums = if sums.is_empty() { "-".to_string() } else { sums };
                    emit(out, format!("record=model index={i} n={} sums={sums}", m.order()));
                } else {
                    emit(out, format!("# model {i}"));
                    let _ = write!(out, "{}", serialize_model(m));
                }
            }
            if machine {
                emit(out, format!("record=enumerate order={order} count={}", models.len()));
            } else {
                emit(out, format!("{} models of order {order}", models.len()));
            }
            Ok(EXIT_OK)
        }
        Command::Laws { file, corpus, law, per_law_timeout } => {
            let selection: Option<Vec<String>> =
                if law.is_empty() { None } else { Some(law.clone()) };
            let limit = per_law_timeout.map(std::time::Duration::from_secs);
            let mut targets: Vec<laws::CorpusModel> = Vec::new();
            match (file, corpus) {
                (Some(path), None) => {
                    let e = load_model(path)?;
                    targets.push(laws::CorpusModel { id: path.clone(), model: e });
                }
                (None, Some(bound)) => {
                    targets.extend(corpus_models(*bound)?);
                }
                _ => return Err(usage("pass exactly one of <file> or --corpus <n>")),
            }
            let mut pass = 0usize;
            let mut fail = 0usize;
            for target in &targets {
                let ctx = laws::ModelCtx::new(&target.id, target.model.clone());
                let results = laws::verify_laws_within(&ctx, selection.as_deref(), limit)
                    .map_err(usage)?;
                for r in &results {
                    if r.pass {
                        pass += 1;
                    } else {
                        fail += 1;
                    }
                    if machine {
                        let witness = r
                            .witness
                            .as_deref()
                            .map(|s| format!(" witness={}", s.replace(' ', "_")))
                            .unwrap_or_default();
                        emit(
                            out,
                            format!(
                                "record=law model={} law={} status={}{witness}",
                                r.model,
                                r.law,
                                if r.pass { "pass" } else { "fail" }
                            ),
                        );
                    } else if !r.pass {
                        emit(
                            out,
                            format!(
                                "FAIL {} @ {}: {}",
                                r.law,
                                r.model,
                                r.witness.as_deref().unwrap_or("")
                            ),
                        );
                    }
                }
            }
            if machine {
                emit(out, format!("record=summary models={} pass={pass} fail={fail}", targets.len()));
            } else {
                emit(
                    out,
                    format!("{} models, {} checks passed, {} failed", targets.len(), pass, fail),
                );
            }
            Ok(if fail == 0 { EXIT_OK } else { EXIT_LAW_FAILURE })
        }
    }
}

fn corpus_models(bound: usize) -> Result<Vec<laws::CorpusModel>, CommandError> {
    if bound > construct::DEFAULT_ORDER_CAP {
        return Err(usage(format!(
            "corpus bound {bound} exceeds the enumeration cap {}",
            construct::DEFAULT_ORDER_CAP
        )));
    }
    Ok(laws::enumerated_corpus(bound))
}

/// Resolve a set spec that must be type-determining; `--close` applies the
/// generated closure and says so in the report.
fn resolve_td(
    e: &FiniteGpea,
    spec: &str,
    close: bool,
    role: &str,
    machine: bool,
    out: &mut dyn Write,
) -> Result<ElementSet, CommandError> {
    let set = parse_set_spec(spec, e)?;
    if typetheory::is_td(e, &set) {
        return Ok(set);
    }
    if !close {
        return Err(usage(format!(
            "{role} = {} is not type-determining (pass --close to take its closure)",
            render_set(e, &set)
        )));
    }
    let closed = typetheory::td_generated(e, &set);
    if machine {
        let _ = writeln!(
            out,
            "record=closed role={role} input={} closure={}",
            machine_set(&set),
            machine_set(&closed)
        );
    } else {
        let _ = writeln!(
            out,
            "note: {role} = {} was not type-determining; using its closure {}",
            render_set(e, &set),
            render_set(e, &closed)
        );
    }
    Ok(closed)
}

fn report_context(
    e: &FiniteGpea,
    role: &str,
    ctx: &typetheory::TdContext,
    machine: bool,
    out: &mut dyn Write,
) {
    if machine {
        let _ = writeln!(
            out,
            "record=tdcontext role={role} set={} central={} kstar={} ktilde={} gamma={} gammatilde={}",
            machine_set(&ctx.k_set),
            machine_set(&ctx.k_tilde_set),
            ctx.k_star,
            ctx.k_tilde,
            machine_map(&ctx.gamma_k),
            machine_map(&ctx.gamma_k_tilde)
        );
    } else {
        let _ = writeln!(out, "{role}:           {}", render_set(e, &ctx.k_set));
        let _ = writeln!(out, "{role} central:   {}", render_set(e, &ctx.k_tilde_set));
        let _ = writeln!(
            out,
            "{role} generator: {} (cover image {})",
            e.label(ctx.k_star),
            render_set(e, ctx.gamma_k.image())
        );
        let _ = writeln!(
            out,
            "{role} central generator: {} (cover image {})",
            e.label(ctx.k_tilde),
            render_set(e, ctx.gamma_k_tilde.image())
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut buf = Vec::new();
        let code = run(&argv, &mut buf);
        (code, String::from_utf8(buf).expect("utf8 output"))
    }

    #[test]
    fn parse_and_serialize_roundtrip() {
        let text = "# diamond\ngpea 4\nlabels 0 a b 1\nsum 1 2 3\nsum 2 1 3\n";
        let e = parse_model(text).unwrap();
        assert_eq!(e.order(), 4);
        assert_eq!(e.oplus(1, 2), Some(3));
        let canonical = serialize_model(&e);
        assert_eq!(canonical, "gpea 4\nlabels 0 a b 1\nsum 1 2 3\nsum 2 1 3\n");
        let again = parse_model(&canonical).unwrap();
        assert_eq!(serialize_model(&again), canonical);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            parse_model("gpea 2\nsum 1 1 0\n"),
            Err(ModelParseError::Invalid(_))
        ));
        assert!(matches!(parse_model("sum 1 1 0\n"), Err(ModelParseError::Syntax { .. })));
        assert!(matches!(
            parse_model("gpea 2\nsum 1 1 5\n"),
            Err(ModelParseError::Table { .. })
        ));
        // duplicate lines must agree
        assert!(matches!(
            parse_model("gpea 4\nsum 1 2 3\nsum 1 2 2\n"),
            Err(ModelParseError::Table { .. })
        ));
        assert!(parse_model("gpea 4\nsum 1 2 3\nsum 1 2 3\nsum 2 1 3\n").is_ok());
    }

    #[test]
    fn unknown_spec_is_usage_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.gpea");
        std::fs::write(&path, "gpea 3\n").unwrap();
        let (code, _) =
            run_capture(&["gpea", "tdclose", path.to_str().unwrap(), "--Q", "bogus", "--op", "gamma"]);
        assert_eq!(code, EXIT_USAGE);
    }
}
