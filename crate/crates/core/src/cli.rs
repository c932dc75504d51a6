//! Command-line surface: file loading, subcommands and report rendering.
//!
//! Every command produces a JSON value and a plain-text rendering of it;
//! `--format json` selects the former. Exit codes: 0 success, 1 a
//! validation failure or negative verdict, 2 a parse or I/O failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::category::{CategoryPresentation, ObjId};
use crate::day::{separability_witness, DayConvolution};
use crate::error::{Error, Result, Violation};
use crate::format::{
    matrix_to_json, read_json, vector_to_json, AlgebraFile, BimoduleFile, CategoryFile, CocycleFile,
    FunctorBody, MonoidFile,
};
use crate::functor::LinearFunctorRep;
use crate::hochschild::{self, CochainRep, ExtensionRep, Hochschild};
use crate::monoid::{BimoduleMorphism, BimoduleRep, MonoidRep};
use crate::oracle::{self, AlgebraRep};

#[derive(Parser, Debug)]
#[command(name = "functor-hh", version, about = "Hochschild cohomology of monoids in categories of linear functors")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Coefficients {
    #[arg(long)]
    pub monoid: PathBuf,
    /// Bimodule file, or `self` for the monoid over itself.
    #[arg(long, default_value = "self")]
    pub bimodule: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Checks every axiom of a category, functor, monoid, bimodule, cocycle or algebra file.
    Validate {
        file: PathBuf,
        /// Monoid for bimodule and cocycle files.
        #[arg(long)]
        monoid: Option<PathBuf>,
        /// Bimodule for cocycle files.
        #[arg(long, default_value = "self")]
        bimodule: String,
    },
    /// Hochschild cohomology dimensions.
    Hh {
        #[command(flatten)]
        coeffs: Coefficients,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Object name or `all`.
        #[arg(long, default_value = "all")]
        at: String,
        #[arg(long)]
        representatives: bool,
    },
    /// The commutant `HH⁰`.
    Commutant {
        #[command(flatten)]
        coeffs: Coefficients,
        #[arg(long, default_value = "all")]
        at: String,
    },
    /// Derivations, inner derivations and `HH¹`.
    Derivations {
        #[command(flatten)]
        coeffs: Coefficients,
        #[arg(long, default_value = "all")]
        at: String,
    },
    /// Searches for a separability element.
    Separability {
        #[arg(long)]
        monoid: PathBuf,
    },
    /// Cup product of two cochains with coefficients in the monoid.
    Cup {
        #[arg(long)]
        monoid: PathBuf,
        #[arg(long = "cocycle", num_args = 1, required = true)]
        cocycles: Vec<PathBuf>,
    },
    /// Bracket of two degree-one cocycles with coefficients in the monoid.
    Bracket {
        #[arg(long)]
        monoid: PathBuf,
        #[arg(long = "cocycle", num_args = 1, required = true)]
        cocycles: Vec<PathBuf>,
    },
    /// The square-zero extension classified by a 2-cocycle.
    Extension {
        #[command(flatten)]
        coeffs: Coefficients,
        #[arg(long)]
        cocycle: PathBuf,
    },
    /// The Baer sum of the extensions of two 2-cocycles.
    BaerSum {
        #[command(flatten)]
        coeffs: Coefficients,
        #[arg(long = "cocycle", num_args = 1, required = true)]
        cocycles: Vec<PathBuf>,
    },
    /// The semidirect product of a monoid with a bimodule.
    Semidirect {
        #[command(flatten)]
        coeffs: Coefficients,
    },
    /// The long exact sequence of the split sequence `K → K ⊕ N → N`.
    Les {
        #[arg(long)]
        monoid: PathBuf,
        /// `K`, or `self`.
        #[arg(long, default_value = "self")]
        kernel: String,
        /// `N`, or `self`.
        #[arg(long, default_value = "self")]
        quotient: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value = "all")]
        at: String,
    },
    /// Classical Hochschild cohomology of an algebra from structure constants.
    Oracle {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Compares the classical computation with the general engine.
    Crosscheck {
        #[arg(long, required_unless_present = "random")]
        algebra: Option<PathBuf>,
        /// Seeds of pseudorandom algebras to check instead.
        #[arg(long, num_args = 1..)]
        random: Vec<u64>,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

/// Exit code with the text destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    json: Value,
    text: String,
    ok: bool,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report { json, text, ok: true }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Io { .. } | Error::DimensionMismatch(_) | Error::UnknownObject(_) | Error::UnknownMorphism(_) => 2,
        _ => 1,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli.command) {
        Ok(r) => {
            let stdout = match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&r.json).expect("reports serialise")),
                Format::Text => r.text,
            };
            Outcome { code: if r.ok { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(e) => {
            let mut stderr = format!("error: {e}\n");
            if cli.format == Format::Json {
                let violations: Vec<Value> = e
                    .violations()
                    .iter()
                    .map(|v| json!({"axiom": v.axiom, "witness": v.witness}))
                    .collect();
                let body = json!({"error": e.to_string(), "violations": violations});
                stderr = format!("{}\n", serde_json::to_string_pretty(&body).expect("reports serialise"));
            }
            Outcome { code: exit_code(&e), stdout: String::new(), stderr }
        }
    }
}

/// Files loaded so far; a category file read twice yields the same
/// presentation, which is how cross-references are matched.
#[derive(Default)]
pub struct Workspace {
    categories: BTreeMap<PathBuf, Arc<CategoryPresentation>>,
    category_paths: BTreeMap<usize, PathBuf>,
}

fn canonical(path: &Path) -> Result<PathBuf> {
    path.canonicalize().map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn category(&mut self, path: &Path) -> Result<Arc<CategoryPresentation>> {
        let key = canonical(path)?;
        if let Some(c) = self.categories.get(&key) {
            return Ok(c.clone());
        }
        let raw: CategoryFile = read_json(&key)?;
        let cat = Arc::new(CategoryPresentation::from_file(&raw)?);
        self.category_paths.insert(Arc::as_ptr(&cat) as usize, key.clone());
        self.categories.insert(key, cat.clone());
        Ok(cat)
    }

    fn referenced_category(&mut self, file: &Path, body: &FunctorBody) -> Result<Arc<CategoryPresentation>> {
        let rel = body
            .category
            .as_deref()
            .ok_or_else(|| Error::Parse(format!("{}: missing \"category\"", file.display())))?;
        let dir = file.parent().unwrap_or(Path::new("."));
        self.category(&dir.join(rel))
    }

    pub fn functor(&mut self, path: &Path) -> Result<LinearFunctorRep> {
        let body: FunctorBody = read_json(path)?;
        let cat = self.referenced_category(path, &body)?;
        LinearFunctorRep::from_body(cat, &body)
    }

    pub fn monoid(&mut self, path: &Path) -> Result<Arc<MonoidRep>> {
        let raw: MonoidFile = read_json(path)?;
        let cat = self.referenced_category(path, &raw.functor)?;
        Ok(Arc::new(MonoidRep::from_file(cat, &raw)?))
    }

    /// `self` or a bimodule file over the same category file as `a`.
    pub fn bimodule(&mut self, spec: &str, a: &Arc<MonoidRep>) -> Result<Arc<BimoduleRep>> {
        if spec == "self" {
            return Ok(Arc::new(BimoduleRep::regular(a)));
        }
        let path = Path::new(spec);
        let raw: BimoduleFile = read_json(path)?;
        let cat = self.referenced_category(path, &raw.functor)?;
        if !Arc::ptr_eq(&cat, a.category()) {
            return Err(Error::Incompatible(format!("{spec} refers to a different category file than the monoid")));
        }
        Ok(Arc::new(BimoduleRep::from_file(a.clone(), &raw)?))
    }

    /// The category file path of a loaded presentation, relative to `from`
    /// when possible.
    fn category_reference(&self, cat: &Arc<CategoryPresentation>) -> Option<String> {
        let p = self.category_paths.get(&(Arc::as_ptr(cat) as usize))?;
        p.file_name().map(|n| n.to_string_lossy().into_owned())
    }
}

fn objects(cat: &CategoryPresentation, at: &str) -> Result<Vec<ObjId>> {
    if at == "all" {
        Ok(cat.objects().collect())
    } else {
        Ok(vec![cat.object(at)?])
    }
}

fn cocycle_file(path: &Path) -> Result<CocycleFile> {
    read_json(path)
}

fn load_cochain(h: &Hochschild, path: &Path) -> Result<CochainRep> {
    let raw = cocycle_file(path)?;
    let x = h.monoid().category().object(&raw.at)?;
    Ok(CochainRep::new(x, h.at(x).cochain_from_file(&raw)?))
}

fn cochain_json(h: &Hochschild, c: &CochainRep) -> Value {
    serde_json::to_value(h.at(c.at).cochain_to_file(&c.family)).expect("cochain files serialise")
}

fn monoid_json(ws: &Workspace, m: &MonoidRep) -> Value {
    let mut file = m.to_file();
    file.functor.category = ws.category_reference(m.category());
    serde_json::to_value(file).expect("monoid files serialise")
}

fn violations_json(v: &[Violation]) -> Value {
    Value::Array(v.iter().map(|v| json!({"axiom": v.axiom, "witness": v.witness})).collect())
}

fn verdict_report(kind: &str, violations: Vec<Violation>, extra: Value) -> Report {
    let ok = violations.is_empty();
    let mut text = String::new();
    if ok {
        let _ = writeln!(text, "{kind}: valid");
    } else {
        let _ = writeln!(text, "{kind}: invalid");
        for v in &violations {
            let _ = writeln!(text, "  {v}");
        }
    }
    if let Value::Object(map) = &extra {
        for (k, v) in map {
            let _ = writeln!(text, "  {k}: {v}");
        }
    }
    let json = json!({"kind": kind, "valid": ok, "violations": violations_json(&violations), "details": extra});
    Report { json, text, ok }
}

fn validation_result<T>(r: Result<T>) -> Result<(Option<T>, Vec<Violation>)> {
    match r {
        Ok(t) => Ok((Some(t), Vec::new())),
        Err(Error::Validation(v)) => Ok((None, v)),
        Err(e) => Err(e),
    }
}

fn validate(ws: &mut Workspace, file: &Path, monoid: Option<&Path>, bimodule: &str) -> Result<Report> {
    let raw: Value = read_json(file)?;
    let has = |k: &str| raw.get(k).is_some();
    let need_monoid = |ws: &mut Workspace| -> Result<Arc<MonoidRep>> {
        let path = monoid.ok_or_else(|| Error::Parse("this file kind needs --monoid".into()))?;
        ws.monoid(path)
    };
    if has("objects") {
        let raw: CategoryFile = serde_json::from_value(raw).map_err(|e| Error::Parse(e.to_string()))?;
        let (_, v) = validation_result(CategoryPresentation::from_file(&raw))?;
        Ok(verdict_report("category", v, json!({})))
    } else if has("structure") {
        let raw: AlgebraFile = serde_json::from_value(raw).map_err(|e| Error::Parse(e.to_string()))?;
        let (_, v) = validation_result(AlgebraRep::from_file(&raw))?;
        Ok(verdict_report("algebra", v, json!({})))
    } else if has("unit_element") {
        let (m, v) = validation_result(ws.monoid(file))?;
        let extra = m.map_or(json!({}), |m| json!({"commutative": m.is_commutative()}));
        Ok(verdict_report("monoid", v, extra))
    } else if has("left") || has("right") {
        let a = need_monoid(ws)?;
        let (_, v) = validation_result(ws.bimodule(&file.display().to_string(), &a))?;
        Ok(verdict_report("bimodule", v, json!({})))
    } else if has("components") {
        let a = need_monoid(ws)?;
        let m = ws.bimodule(bimodule, &a)?;
        let h = Hochschild::new(&a, &m)?;
        let c = load_cochain(&h, file)?;
        let cocycle = h.at(c.at).is_cocycle(&c.family);
        let v = if cocycle {
            Vec::new()
        } else {
            vec![Violation::new("cocycle condition", h.at(c.at).object_name().to_string())]
        };
        Ok(verdict_report("cocycle", v, json!({"degree": c.degree()})))
    } else if has("values") {
        let (_, v) = validation_result(ws.functor(file))?;
        Ok(verdict_report("functor", v, json!({})))
    } else {
        Err(Error::Parse(format!("{}: unrecognised file kind", file.display())))
    }
}

fn setup(ws: &mut Workspace, c: &Coefficients) -> Result<Hochschild> {
    let a = ws.monoid(&c.monoid)?;
    let m = ws.bimodule(&c.bimodule, &a)?;
    Hochschild::new(&a, &m)
}

fn dims_table(cat: &CategoryPresentation, objs: &[ObjId], rows: &[Vec<usize>], label: &str) -> String {
    let mut text = String::new();
    let _ = write!(text, "{label:<8}");
    for &x in objs {
        let _ = write!(text, "{:>8}", cat.object_name(x));
    }
    text.push('\n');
    for (n, row) in rows.iter().enumerate() {
        let _ = write!(text, "{n:<8}");
        for d in row {
            let _ = write!(text, "{d:>8}");
        }
        text.push('\n');
    }
    text
}

fn hh(ws: &mut Workspace, coeffs: &Coefficients, max_n: usize, at: &str, reps: bool) -> Result<Report> {
    let h = setup(ws, coeffs)?;
    let cat = h.monoid().category().clone();
    let objs = objects(&cat, at)?;
    let report = hochschild::hh_compute_with(&h, max_n, Some(&objs))?;
    let rows: Vec<Vec<usize>> = (0..=max_n)
        .map(|n| report.objects.iter().map(|o| o.degrees[n].dim).collect())
        .collect();
    let mut dims = serde_json::Map::new();
    let mut cochain_dims = serde_json::Map::new();
    for n in 0..=max_n {
        let per: serde_json::Map<String, Value> =
            report.objects.iter().map(|o| (o.name.clone(), json!(o.degrees[n].dim))).collect();
        let cd: serde_json::Map<String, Value> =
            report.objects.iter().map(|o| (o.name.clone(), json!(o.cochain_dims[n]))).collect();
        dims.insert(n.to_string(), Value::Object(per));
        cochain_dims.insert(n.to_string(), Value::Object(cd));
    }
    let verified = report.objects.iter().all(|o| o.beta_squared_verified);
    let mut json = json!({
        "max_degree": max_n,
        "dims": dims,
        "cochain_dims": cochain_dims,
        "beta_squared_verified": verified,
    });
    let mut text = String::from("HH dimensions\n");
    text += &dims_table(&cat, &objs, &rows, "degree");
    let _ = writeln!(text, "beta squared vanishes: {verified}");
    if reps {
        let mut all = serde_json::Map::new();
        for n in 0..=max_n {
            let mut per = serde_json::Map::new();
            for o in &report.objects {
                let files: Vec<Value> = o
                    .representatives(n)
                    .iter()
                    .map(|f| serde_json::to_value(h.at(o.object).cochain_to_file(f)).expect("cochain files serialise"))
                    .collect();
                if !files.is_empty() {
                    let _ = writeln!(text, "representatives of HH^{n} at {}:", o.name);
                    for f in &files {
                        let _ = writeln!(text, "  {}", f["components"]);
                    }
                }
                per.insert(o.name.clone(), Value::Array(files));
            }
            all.insert(n.to_string(), Value::Object(per));
        }
        json["representatives"] = Value::Object(all);
    }
    Ok(Report::ok(json, text))
}

fn commutant(ws: &mut Workspace, coeffs: &Coefficients, at: &str) -> Result<Report> {
    let h = setup(ws, coeffs)?;
    let cat = h.monoid().category().clone();
    let mut json = serde_json::Map::new();
    let mut text = String::from("commutant\n");
    for x in objects(&cat, at)? {
        let c = h.at(x);
        let ker = crate::linalg::rref(&*c.differential(0)?).kernel;
        let elems: Vec<Value> = ker
            .vectors()
            .iter()
            .map(|v| Value::Array(vector_to_json(&c.cochain(0, v).blocks[0].column(0))))
            .collect();
        let _ = writeln!(text, "  {}: dim {}", cat.object_name(x), ker.dim());
        for e in &elems {
            let _ = writeln!(text, "    {e}");
        }
        json.insert(cat.object_name(x).to_string(), json!({"dim": ker.dim(), "basis": elems}));
    }
    Ok(Report::ok(Value::Object(json), text))
}

fn derivations(ws: &mut Workspace, coeffs: &Coefficients, at: &str) -> Result<Report> {
    let h = setup(ws, coeffs)?;
    let cat = h.monoid().category().clone();
    let mut json = serde_json::Map::new();
    let mut text = format!("{:<8}{:>8}{:>8}{:>8}\n", "object", "Der", "Inn", "HH1");
    for x in objects(&cat, at)? {
        let d = hochschild::derivation_spaces(h.monoid(), h.bimodule(), x)?;
        let name = cat.object_name(x);
        let _ = writeln!(text, "{name:<8}{:>8}{:>8}{:>8}", d.derivations.dim(), d.inner.dim(), d.hh1());
        let basis: Vec<Value> = d
            .derivations
            .vectors()
            .iter()
            .map(|v| serde_json::to_value(h.at(x).cochain_to_file(&h.at(x).cochain(1, v))).expect("cochain files serialise"))
            .collect();
        json.insert(
            name.to_string(),
            json!({"derivations": d.derivations.dim(), "inner": d.inner.dim(), "hh1": d.hh1(), "derivation_basis": basis}),
        );
    }
    Ok(Report::ok(Value::Object(json), text))
}

fn separability(ws: &mut Workspace, monoid: &Path) -> Result<Report> {
    let a = ws.monoid(monoid)?;
    let cat = a.category().clone();
    match separability_witness(&a)? {
        None => Ok(Report::ok(json!({"separable": false}), "not separable: no central element multiplies to the unit\n".into())),
        Some(w) => {
            let day = DayConvolution::new(&a);
            let v = day.value(cat.unit());
            let lift = v.lift(&w.xi);
            let mut terms = Vec::new();
            let mut text = String::from("separable\nxi =");
            for (k, c) in lift.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let g = &v.generators[k];
                let beta = &cat.basis_morphism(g.beta).name;
                let _ = write!(text, " + ({c})[{beta}, e{}, e{}]", g.i, g.j);
                terms.push(json!({
                    "coefficient": c.to_json(),
                    "morphism": beta,
                    "left": [cat.object_name(g.x), g.i],
                    "right": [cat.object_name(g.y), g.j],
                }));
            }
            text.push('\n');
            let _ = writeln!(text, "mu o t = id verified at every object");
            let t: serde_json::Map<String, Value> = cat
                .objects()
                .map(|x| (cat.object_name(x).to_string(), json!(matrix_to_json(&w.t[x]))))
                .collect();
            Ok(Report::ok(
                json!({"separable": true, "xi": vector_to_json(&w.xi), "xi_terms": terms, "t": t}),
                text,
            ))
        }
    }
}

fn two_cochains(ws: &mut Workspace, monoid: &Path, paths: &[PathBuf]) -> Result<(Hochschild, CochainRep, CochainRep)> {
    if paths.len() != 2 {
        return Err(Error::Parse("expected exactly two --cocycle arguments".into()));
    }
    let a = ws.monoid(monoid)?;
    let h = Hochschild::new(&a, &BimoduleRep::regular(&a))?;
    let f = load_cochain(&h, &paths[0])?;
    let g = load_cochain(&h, &paths[1])?;
    Ok((h, f, g))
}

fn product_report(h: &Hochschild, c: &CochainRep, what: &str) -> Report {
    let cx = h.at(c.at);
    let cocycle = cx.is_cocycle(&c.family);
    let file = cochain_json(h, c);
    let text = format!(
        "{what}: degree {} at {}, cocycle: {cocycle}\n{}\n",
        c.degree(),
        cx.object_name(),
        serde_json::to_string_pretty(&file).expect("cochain files serialise")
    );
    Report::ok(json!({"cocycle": cocycle, "cochain": file}), text)
}

fn extension_report(ws: &Workspace, e: &ExtensionRep, extra: Value, header: String) -> Report {
    let violations = e.validate();
    let ok = violations.is_empty();
    let mut text = header;
    let _ = writeln!(text, "extension axioms: {}", if ok { "hold" } else { "fail" });
    for v in &violations {
        let _ = writeln!(text, "  {v}");
    }
    let unit = e.monoid.unit_element();
    let _ = writeln!(text, "unit: [{}]", unit.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    let mut json = json!({
        "valid": ok,
        "violations": violations_json(&violations),
        "monoid": monoid_json(ws, &e.monoid),
    });
    if let (Value::Object(j), Value::Object(x)) = (&mut json, extra) {
        j.extend(x);
    }
    Report { json, text, ok }
}

fn les(ws: &mut Workspace, monoid: &Path, kernel: &str, quotient: &str, max_n: usize, at: &str) -> Result<Report> {
    let a = ws.monoid(monoid)?;
    let k = ws.bimodule(kernel, &a)?;
    let n = ws.bimodule(quotient, &a)?;
    let (inj, surj) = BimoduleMorphism::split_pair(&k, &n)?;
    let cat = a.category().clone();
    let mut json = serde_json::Map::new();
    let mut text = String::new();
    let mut ok = true;
    for x in objects(&cat, at)? {
        let l = hochschild::hh_long_exact_sequence(&inj, &surj, x, max_n)?;
        let additive = (0..=max_n).all(|i| l.dims_m[i] == l.dims_k[i] + l.dims_n[i]);
        ok &= l.is_exact();
        let name = cat.object_name(x);
        let _ = writeln!(text, "at {name}: exact {}, additive {additive}", l.is_exact());
        let _ = writeln!(text, "  K {:?}\n  M {:?}\n  N {:?}", l.dims_k, l.dims_m, l.dims_n);
        for j in l.junctions.iter().filter(|j| !j.exact) {
            let _ = writeln!(text, "  not exact at {}", j.label);
        }
        json.insert(
            name.to_string(),
            json!({
                "exact": l.is_exact(),
                "additive": additive,
                "dims_k": l.dims_k,
                "dims_m": l.dims_m,
                "dims_n": l.dims_n,
                "junctions": l.junctions.iter().map(|j| json!({"at": j.label, "exact": j.exact})).collect::<Vec<_>>(),
            }),
        );
    }
    Ok(Report { json: Value::Object(json), text, ok })
}

fn load_algebra(path: &Path) -> Result<AlgebraRep> {
    AlgebraRep::from_file(&read_json(path)?)
}

fn crosscheck(algebra: Option<&Path>, seeds: &[u64], max_n: usize) -> Result<Report> {
    let mut cases = Vec::new();
    if let Some(p) = algebra {
        cases.push((p.display().to_string(), load_algebra(p)?));
    }
    for &s in seeds {
        cases.push((format!("seed {s}"), oracle::random_algebra(crate::scalar::Field::Rationals, s)));
    }
    let mut ok = true;
    let mut text = String::new();
    let mut results = Vec::new();
    for (name, alg) in cases {
        let c = oracle::crosscheck(&alg, max_n)?;
        ok &= c.passed();
        match c.first_divergence {
            None => {
                let _ = writeln!(text, "{name}: match {:?}", c.classical);
            }
            Some(n) => {
                let _ = writeln!(text, "{name}: MISMATCH at degree {n}: classical {:?}, general {:?}", c.classical, c.general);
            }
        }
        results.push(json!({"case": name, "dimension": alg.dim, "result": c}));
    }
    Ok(Report { json: json!({"passed": ok, "cases": results}), text, ok })
}

fn execute(cmd: &Command) -> Result<Report> {
    let mut ws = Workspace::new();
    match cmd {
        Command::Validate { file, monoid, bimodule } => validate(&mut ws, file, monoid.as_deref(), bimodule),
        Command::Hh { coeffs, max_degree, at, representatives } => hh(&mut ws, coeffs, *max_degree, at, *representatives),
        Command::Commutant { coeffs, at } => commutant(&mut ws, coeffs, at),
        Command::Derivations { coeffs, at } => derivations(&mut ws, coeffs, at),
        Command::Separability { monoid } => separability(&mut ws, monoid),
        Command::Cup { monoid, cocycles } => {
            let (h, f, g) = two_cochains(&mut ws, monoid, cocycles)?;
            let c = hochschild::cup_product(&h, &f, &g)?;
            Ok(product_report(&h, &c, "cup product"))
        }
        Command::Bracket { monoid, cocycles } => {
            let (h, f, g) = two_cochains(&mut ws, monoid, cocycles)?;
            let c = hochschild::lie_bracket_deg1(&h, &f, &g)?;
            Ok(product_report(&h, &c, "bracket"))
        }
        Command::Extension { coeffs, cocycle } => {
            let h = setup(&mut ws, coeffs)?;
            let f = load_cochain(&h, cocycle)?;
            let e = hochschild::extension_from_cocycle(&h.at(f.at), &f.family)?;
            let header = format!("extension of {} by M_{}\n", coeffs.monoid.display(), h.at(f.at).object_name());
            Ok(extension_report(&ws, &e, json!({}), header))
        }
        Command::BaerSum { coeffs, cocycles } => {
            if cocycles.len() != 2 {
                return Err(Error::Parse("expected exactly two --cocycle arguments".into()));
            }
            let h = setup(&mut ws, coeffs)?;
            let f = load_cochain(&h, &cocycles[0])?;
            let g = load_cochain(&h, &cocycles[1])?;
            if f.at != g.at {
                return Err(Error::Incompatible("cocycles live at different objects".into()));
            }
            let c = h.at(f.at);
            let ef = hochschild::extension_from_cocycle(&c, &f.family)?;
            let eg = hochschild::extension_from_cocycle(&c, &g.family)?;
            let sum = hochschild::baer_sum(&ef, &eg)?;
            let target = hochschild::extension_from_cocycle(&c, &f.family.add(&g.family))?;
            let equivalent = hochschild::extension_equivalence(&sum, &target, None)?.is_some();
            let header = format!("Baer sum; equivalent to the extension of f + g: {equivalent}\n");
            let mut r = extension_report(&ws, &sum, json!({"equivalent_to_sum_cocycle": equivalent}), header);
            r.ok &= equivalent;
            Ok(r)
        }
        Command::Semidirect { coeffs } => {
            let a = ws.monoid(&coeffs.monoid)?;
            let m = ws.bimodule(&coeffs.bimodule, &a)?;
            let s = hochschild::semidirect_product(&m, &a)?;
            let text = format!(
                "semidirect product, dimensions {:?}\n{}\n",
                s.functor().dims(),
                serde_json::to_string_pretty(&monoid_json(&ws, &s)).expect("monoid files serialise")
            );
            Ok(Report::ok(json!({"monoid": monoid_json(&ws, &s)}), text))
        }
        Command::Les { monoid, kernel, quotient, max_degree, at } => les(&mut ws, monoid, kernel, quotient, *max_degree, at),
        Command::Oracle { algebra, max_degree } => {
            let alg = load_algebra(algebra)?;
            let dims = oracle::classical_hh(&alg, &alg.coefficients(), *max_degree)?;
            let text = format!("classical HH dimensions, degrees 0..={max_degree}: {dims:?}\n");
            let by_degree: serde_json::Map<String, Value> =
                dims.iter().enumerate().map(|(n, d)| (n.to_string(), json!(d))).collect();
            Ok(Report::ok(json!({"dims": by_degree}), text))
        }
        Command::Crosscheck { algebra, random, max_degree } => crosscheck(algebra.as_deref(), random, *max_degree),
    }
}
