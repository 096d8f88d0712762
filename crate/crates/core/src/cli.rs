//! JSON workspaces and the command implementations behind the binary.
//!
//! A workspace is `{"field": {"type": "Fp", "p": 2} | {"type": "Q"}, "objects": {...}}`.
//! Every linear map is a row-major matrix whose column `j` is the image of
//! the `j`-th basis vector; coproducts and coactions are lifts into tensor
//! products over the field. Multiplications and actions are 3-tensors
//! `t[i][j][l]`: the coefficient of `e_l` in the product of `e_i` and `e_j`.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::algmod::{Algebra, AlgebraMap, Bimodule, RightModule};
use crate::constructions::{
    comatrix_coring, entwining_coring, sweedler_coring, trivial_coring, Coalgebra, DualBasis, Entwining,
};
use crate::coring::{check_colinear, dual_ring, Comodule, Coring};
use crate::descent::{chain_extension, check_chain, descent_functor, ChainData, DescentDatum};
use crate::error::Error;
use crate::exactla::Mat;
use crate::extension::{
    apply_functor, compose_extensions, enumerate_measurings, extension_from_coring_map, induced_coaction,
    measuring_to_algebra_map, CoringExtension, Measuring,
};
use crate::field::{Field, Scalar};
use crate::fixtures::{self, Fixture};

/// Exit codes of the binary.
pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SIZE: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Schema { path: String, message: String },
    UnknownReference { path: String, name: String },
    Math { object: String, error: Error },
    Size(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema { .. } | CliError::UnknownReference { .. } => EXIT_INPUT,
            CliError::Math { .. } => EXIT_MATH,
            CliError::Size(_) => EXIT_SIZE,
        }
    }

    pub fn report(&self) -> Value {
        match self {
            CliError::Schema { path, message } => json!({"status": "error", "error": "schema", "path": path, "message": message}),
            CliError::UnknownReference { path, name } => {
                json!({"status": "error", "error": "unknown-reference", "path": path, "name": name})
            }
            CliError::Math { object, error } => {
                let mut r = json!({"status": "fail", "object": object, "message": error.to_string()});
                if let Some((axiom, witness)) = axiom_of(error) {
                    r["axiom"] = json!(axiom);
                    r["witness"] = json!(witness);
                }
                r
            }
            CliError::Size(e) => json!({"status": "error", "error": "size-limit", "message": e.to_string()}),
        }
    }
}

fn axiom_of(e: &Error) -> Option<(&'static str, Vec<usize>)> {
    match e {
        Error::AxiomViolation { axiom, witness }
        | Error::NotCoringMorphism { axiom, witness }
        | Error::NotColinear { axiom, witness } => Some((axiom.name(), witness.clone())),
        Error::DualBasisInvalid { witness } => Some(("dual-basis", vec![*witness])),
        _ => None,
    }
}

/// Sorts a library error into the exit-code classes.
fn classify(object: &str, path: &str, e: Error) -> CliError {
    match e {
        Error::SizeLimit { .. } => CliError::Size(e),
        Error::DimensionMismatch { .. }
        | Error::InvalidField(_)
        | Error::InvalidScalar(_)
        | Error::FieldMismatch
        | Error::NonFiniteField => CliError::Schema {
            path: path.to_string(),
            message: e.to_string(),
        },
        _ => CliError::Math {
            object: object.to_string(),
            error: e,
        },
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn schema<T>(path: &str, message: impl Into<String>) -> CliResult<T> {
    Err(CliError::Schema {
        path: path.to_string(),
        message: message.into(),
    })
}

#[derive(Clone, Debug)]
pub struct ComoduleMap {
    pub source: Comodule,
    pub target: Comodule,
    pub matrix: Mat,
}

#[derive(Clone, Debug)]
pub enum Object {
    Algebra(Algebra),
    AlgebraMap(AlgebraMap),
    Bimodule(Bimodule),
    Coalgebra(Coalgebra),
    Coring(Coring),
    Comodule(Comodule),
    Measuring(Measuring),
    Extension(CoringExtension),
    DescentDatum(DescentDatum),
    Chain(ChainData),
    ComoduleMap(ComoduleMap),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Algebra(_) => "algebra",
            Object::AlgebraMap(_) => "algebra_map",
            Object::Bimodule(_) => "bimodule",
            Object::Coalgebra(_) => "coalgebra",
            Object::Coring(_) => "coring",
            Object::Comodule(_) => "comodule",
            Object::Measuring(_) => "measuring",
            Object::Extension(_) => "extension",
            Object::DescentDatum(_) => "descent_datum",
            Object::Chain(_) => "descent_chain",
            Object::ComoduleMap(_) => "comodule_map",
        }
    }

    fn dim(&self) -> Option<usize> {
        match self {
            Object::Algebra(a) => Some(a.dim()),
            Object::Bimodule(b) => Some(b.dim),
            Object::Coalgebra(c) => Some(c.dim),
            Object::Coring(c) => Some(c.dim()),
            Object::Comodule(m) => Some(m.dim()),
            Object::Extension(e) => Some(e.c.dim()),
            Object::DescentDatum(d) => Some(d.dim()),
            _ => None,
        }
    }
}

/// A fully validated workspace.
pub struct Workspace {
    pub field: Field,
    pub objects: BTreeMap<String, Object>,
    /// Names declared in the file, in key order.
    pub declared: Vec<String>,
}

pub fn parse_field(v: &Value, path: &str) -> CliResult<Field> {
    match v.get("type").and_then(Value::as_str) {
        Some("Q") => Ok(Field::rationals()),
        Some("Fp") => {
            let p = v.get("p").and_then(Value::as_u64);
            match p {
                Some(p) => Field::prime(p).or_else(|e| schema(&format!("{path}.p"), e.to_string())),
                None => schema(&format!("{path}.p"), "expected a positive integer"),
            }
        }
        _ => schema(&format!("{path}.type"), "expected \"Fp\" or \"Q\""),
    }
}

/// `"2"`, `"F3"`, `"Q"`.
pub fn parse_field_flag(text: &str) -> CliResult<Field> {
    if text == "Q" {
        return Ok(Field::rationals());
    }
    let digits = text.strip_prefix('F').unwrap_or(text);
    match digits.parse::<u64>() {
        Ok(p) => Field::prime(p).or_else(|e| schema("--field", e.to_string())),
        Err(_) => schema("--field", "expected a prime, Fp, or Q"),
    }
}

impl Workspace {
    pub fn empty(field: Field) -> Workspace {
        Workspace {
            field,
            objects: BTreeMap::new(),
            declared: Vec::new(),
        }
    }

    pub fn parse(text: &str) -> CliResult<Workspace> {
        let v: Value = serde_json::from_str(text).or_else(|e| schema("$", e.to_string()))?;
        let Some(top) = v.as_object() else {
            return schema("$", "expected an object");
        };
        let field = parse_field(top.get("field").unwrap_or(&Value::Null), "$.field")?;
        let raw = match top.get("objects") {
            Some(Value::Object(m)) => m.clone(),
            None => Map::new(),
            _ => return schema("$.objects", "expected an object"),
        };
        let mut loader = Loader {
            field,
            raw: &raw,
            done: BTreeMap::new(),
            active: Vec::new(),
        };
        let declared: Vec<String> = raw.keys().cloned().collect();
        for name in &declared {
            loader.resolve(name, &format!("$.objects.{name}"))?;
        }
        Ok(Workspace {
            field,
            objects: loader.done,
            declared,
        })
    }

    /// A declared object or a fixture name.
    pub fn get(&self, name: &str, path: &str) -> CliResult<Object> {
        if let Some(o) = self.objects.get(name) {
            return Ok(o.clone());
        }
        fixture_object(name, self.field, path)
    }
}

fn fixture_object(name: &str, field: Field, path: &str) -> CliResult<Object> {
    if !(name.starts_with("FIX.") || name.contains('@')) {
        return Err(CliError::UnknownReference {
            path: path.to_string(),
            name: name.to_string(),
        });
    }
    match fixtures::lookup(name, field) {
        Ok(Fixture::Algebra(a)) => Ok(Object::Algebra(a)),
        Ok(Fixture::Coalgebra(c)) => Ok(Object::Coalgebra(c)),
        Ok(Fixture::Coring(c)) => Ok(Object::Coring(c)),
        Err(Error::UnknownReference(_)) => Err(CliError::UnknownReference {
            path: path.to_string(),
            name: name.to_string(),
        }),
        Err(e) => Err(classify(name, path, e)),
    }
}

struct Loader<'a> {
    field: Field,
    raw: &'a Map<String, Value>,
    done: BTreeMap<String, Object>,
    active: Vec<String>,
}

impl<'a> Loader<'a> {
    fn resolve(&mut self, name: &str, path: &str) -> CliResult<Object> {
        if let Some(o) = self.done.get(name) {
            return Ok(o.clone());
        }
        let Some(def) = self.raw.get(name) else {
            return fixture_object(name, self.field, path);
        };
        if self.active.iter().any(|n| n == name) {
            return schema(path, format!("cyclic reference through {name}"));
        }
        self.active.push(name.to_string());
        let here = format!("$.objects.{name}");
        let obj = self.build(name, def, &here)?;
        if obj_field(&obj) != self.field {
            return schema(&here, "object is defined over a different field");
        }
        self.active.pop();
        self.done.insert(name.to_string(), obj.clone());
        Ok(obj)
    }

    fn reference(&mut self, def: &Value, key: &str, path: &str) -> CliResult<Object> {
        let p = format!("{path}.{key}");
        match def.get(key).and_then(Value::as_str) {
            Some(n) => self.resolve(n, &p),
            None => schema(&p, "expected an object name"),
        }
    }

    fn algebra(&mut self, def: &Value, key: &str, path: &str) -> CliResult<Algebra> {
        match self.reference(def, key, path)? {
            Object::Algebra(a) => Ok(a),
            o => schema(&format!("{path}.{key}"), format!("expected an algebra, found {}", o.kind())),
        }
    }

    fn coring(&mut self, def: &Value, key: &str, path: &str) -> CliResult<Coring> {
        match self.reference(def, key, path)? {
            Object::Coring(c) => Ok(c),
            Object::Coalgebra(c) => Ok(c.to_coring()),
            o => schema(&format!("{path}.{key}"), format!("expected a coring, found {}", o.kind())),
        }
    }

    fn map(&mut self, def: &Value, key: &str, path: &str) -> CliResult<AlgebraMap> {
        match self.reference(def, key, path)? {
            Object::AlgebraMap(m) => Ok(m),
            o => schema(&format!("{path}.{key}"), format!("expected an algebra map, found {}", o.kind())),
        }
    }

    fn comodule(&mut self, def: &Value, key: &str, path: &str) -> CliResult<Comodule> {
        match self.reference(def, key, path)? {
            Object::Comodule(m) => Ok(m),
            o => schema(&format!("{path}.{key}"), format!("expected a comodule, found {}", o.kind())),
        }
    }

    fn build(&mut self, name: &str, def: &Value, path: &str) -> CliResult<Object> {
        let f = self.field;
        let math = |e: Error| classify(name, path, e);
        if let Some(fx) = def.get("fixture") {
            return match fx.as_str() {
                Some(n) => fixture_object(n, f, &format!("{path}.fixture")),
                None => schema(&format!("{path}.fixture"), "expected a fixture name"),
            };
        }
        let kind = match def.get("kind").and_then(Value::as_str) {
            Some(k) => k,
            None => return schema(&format!("{path}.kind"), "expected a string"),
        };
        let field_at = |key: &str| format!("{path}.{key}");
        Ok(match kind {
            "algebra" => {
                let dim = usize_at(def, "dim", path)?;
                let mult = tensor3(get(def, "mult", path)?, f, &field_at("mult"), dim, dim, dim)?;
                let unit = vector(get(def, "unit", path)?, f, &field_at("unit"), dim)?;
                Object::Algebra(Algebra::new(mult, Mat::column(f, unit)).map_err(math)?)
            }
            "algebra_map" => {
                let source = self.algebra(def, "source", path)?;
                let target = self.algebra(def, "target", path)?;
                let m = matrix(get(def, "matrix", path)?, f, &field_at("matrix"), target.dim(), source.dim())?;
                Object::AlgebraMap(AlgebraMap::new(source, target, m).map_err(math)?)
            }
            "bimodule" => {
                let left = self.algebra(def, "left", path)?;
                let right = self.algebra(def, "right", path)?;
                let dim = usize_at(def, "dim", path)?;
                let lact = left_action(get(def, "lact", path)?, f, &field_at("lact"), left.dim(), dim)?;
                let ract = right_action(get(def, "ract", path)?, f, &field_at("ract"), dim, right.dim())?;
                Object::Bimodule(Bimodule::new(left, right, dim, lact, ract).map_err(math)?)
            }
            "coalgebra" => {
                let dim = usize_at(def, "dim", path)?;
                let delta = matrix(get(def, "delta", path)?, f, &field_at("delta"), dim * dim, dim)?;
                let eps = matrix(get(def, "eps", path)?, f, &field_at("eps"), 1, dim)?;
                Object::Coalgebra(Coalgebra::new(delta, eps).map_err(math)?)
            }
            "coring" => {
                let bimod = match self.reference(def, "bimodule", path)? {
                    Object::Bimodule(b) => b,
                    o => return schema(&field_at("bimodule"), format!("expected a bimodule, found {}", o.kind())),
                };
                let n = bimod.dim;
                let delta = matrix(get(def, "delta", path)?, f, &field_at("delta"), n * n, n)?;
                let eps = matrix(get(def, "eps", path)?, f, &field_at("eps"), bimod.left.dim(), n)?;
                Object::Coring(Coring::new(bimod, delta, eps).map_err(math)?)
            }
            "trivial_coring" => Object::Coring(trivial_coring(&self.algebra(def, "algebra", path)?)),
            "sweedler_coring" => Object::Coring(sweedler_coring(&self.map(def, "map", path)?).map_err(math)?),
            "comatrix_coring" => {
                let sigma = match self.reference(def, "bimodule", path)? {
                    Object::Bimodule(b) => b,
                    o => return schema(&field_at("bimodule"), format!("expected a bimodule, found {}", o.kind())),
                };
                let elements = list(def, "elements", path)?
                    .iter()
                    .enumerate()
                    .map(|(i, v)| vector(v, f, &format!("{path}.elements[{i}]"), sigma.dim).map(|x| Mat::column(f, x)))
                    .collect::<CliResult<Vec<_>>>()?;
                let functionals = list(def, "functionals", path)?
                    .iter()
                    .enumerate()
                    .map(|(i, v)| matrix(v, f, &format!("{path}.functionals[{i}]"), sigma.right.dim(), sigma.dim))
                    .collect::<CliResult<Vec<_>>>()?;
                let db = DualBasis { elements, functionals };
                Object::Coring(comatrix_coring(&sigma, &db).map_err(math)?)
            }
            "entwining_coring" => {
                let alg = self.algebra(def, "algebra", path)?;
                let coalg = match self.reference(def, "coalgebra", path)? {
                    Object::Coalgebra(c) => c,
                    o => return schema(&field_at("coalgebra"), format!("expected a coalgebra, found {}", o.kind())),
                };
                let (da, nc) = (alg.dim(), coalg.dim);
                let psi = match def.get("psi") {
                    Some(Value::String(s)) if s == "flip" => Entwining::flip(&alg, &coalg).psi,
                    Some(v) => matrix(v, f, &field_at("psi"), da * nc, nc * da)?,
                    None => return schema(&field_at("psi"), "missing"),
                };
                Object::Coring(entwining_coring(&Entwining { alg, coalg, psi }).map_err(math)?)
            }
            "coalgebra_coring" => Object::Coring(self.coring(def, "coalgebra", path)?),
            "comodule" => {
                let c = self.coring(def, "coring", path)?;
                if def.get("regular").and_then(Value::as_bool) == Some(true) {
                    Object::Comodule(Comodule::regular(&c))
                } else if def.get("cofree").and_then(Value::as_bool) == Some(true) {
                    Object::Comodule(Comodule::cofree(&c, &c.bimod.right_module()).map_err(math)?)
                } else {
                    let dim = usize_at(def, "dim", path)?;
                    let act = right_action(get(def, "action", path)?, f, &field_at("action"), dim, c.alg.dim())?;
                    let rho = matrix(get(def, "rho", path)?, f, &field_at("rho"), dim * c.dim(), dim)?;
                    let module = RightModule::new(c.alg.clone(), dim, act).map_err(math)?;
                    Object::Comodule(Comodule::new(c, module, rho).map_err(math)?)
                }
            }
            "comodule_map" => {
                let source = self.comodule(def, "source", path)?;
                let target = self.comodule(def, "target", path)?;
                let m = matrix(get(def, "matrix", path)?, f, &field_at("matrix"), target.dim(), source.dim())?;
                check_colinear(&m, &source, &target).map_err(math)?;
                Object::ComoduleMap(ComoduleMap {
                    source,
                    target,
                    matrix: m,
                })
            }
            "measuring" => {
                let c = self.coring(def, "coring", path)?;
                let b = self.algebra(def, "algebra", path)?;
                let nu = matrix(get(def, "nu", path)?, f, &field_at("nu"), c.alg.dim(), c.dim() * b.dim())?;
                Object::Measuring(Measuring::new(c, b, nu).map_err(math)?)
            }
            "extension" => {
                let c = self.coring(def, "c", path)?;
                if def.get("identity").and_then(Value::as_bool) == Some(true) {
                    Object::Extension(CoringExtension::identity(&c))
                } else {
                    let d = self.coring(def, "d", path)?;
                    let ract = right_action(get(def, "ract", path)?, f, &field_at("ract"), c.dim(), d.alg.dim())?;
                    let sigma = matrix(get(def, "sigma", path)?, f, &field_at("sigma"), c.dim() * d.dim(), c.dim())?;
                    Object::Extension(CoringExtension::new(c, d, ract, sigma).map_err(math)?)
                }
            }
            "extension_from_coring_map" => {
                let c = self.coring(def, "c", path)?;
                let d = self.coring(def, "d", path)?;
                let gamma = matrix(get(def, "gamma", path)?, f, &field_at("gamma"), d.dim(), c.dim())?;
                Object::Extension(extension_from_coring_map(&gamma, &c, &d).map_err(math)?)
            }
            "descent_datum" => {
                let iota = self.map(def, "map", path)?;
                let a = iota.target.clone();
                let module = if def.get("regular").and_then(Value::as_bool) == Some(true) {
                    RightModule::regular(&a)
                } else {
                    let dim = usize_at(def, "dim", path)?;
                    let act = right_action(get(def, "action", path)?, f, &field_at("action"), dim, a.dim())?;
                    RightModule::new(a.clone(), dim, act).map_err(math)?
                };
                let fm = matrix(get(def, "f", path)?, f, &field_at("f"), module.dim * a.dim(), module.dim)?;
                Object::DescentDatum(DescentDatum::new(iota, module, fm).map_err(math)?)
            }
            "descent_chain" => {
                let iota_b = self.map(def, "iota_b", path)?;
                let iota_a = self.map(def, "iota_a", path)?;
                let (da, db) = (iota_a.target.dim(), iota_a.source.dim());
                let rho_a = right_action(get(def, "rho_a", path)?, f, &field_at("rho_a"), da, db)?;
                let phi = matrix(get(def, "phi", path)?, f, &field_at("phi"), da * da * db, da)?;
                let data = ChainData {
                    iota_b,
                    iota_a,
                    rho_a,
                    phi,
                };
                check_chain(&data).map_err(math)?;
                Object::Chain(data)
            }
            other => return schema(&field_at("kind"), format!("unknown kind {other}")),
        })
    }
}

fn obj_field(o: &Object) -> Field {
    match o {
        Object::Algebra(a) => a.field(),
        Object::AlgebraMap(m) => m.source.field(),
        Object::Bimodule(b) => b.field(),
        Object::Coalgebra(c) => c.field,
        Object::Coring(c) => c.field(),
        Object::Comodule(m) => m.field(),
        Object::Measuring(m) => m.alg.field(),
        Object::Extension(e) => e.c.field(),
        Object::DescentDatum(d) => d.iota.source.field(),
        Object::Chain(c) => c.iota_a.source.field(),
        Object::ComoduleMap(m) => m.source.field(),
    }
}

fn get<'v>(def: &'v Value, key: &str, path: &str) -> CliResult<&'v Value> {
    match def.get(key) {
        Some(v) => Ok(v),
        None => schema(&format!("{path}.{key}"), "missing"),
    }
}

fn list<'v>(def: &'v Value, key: &str, path: &str) -> CliResult<&'v Vec<Value>> {
    match get(def, key, path)? {
        Value::Array(a) => Ok(a),
        _ => schema(&format!("{path}.{key}"), "expected an array"),
    }
}

fn usize_at(def: &Value, key: &str, path: &str) -> CliResult<usize> {
    match get(def, key, path)?.as_u64() {
        Some(n) => Ok(n as usize),
        None => schema(&format!("{path}.{key}"), "expected a nonnegative integer"),
    }
}

fn scalar(v: &Value, f: Field, path: &str) -> CliResult<Scalar> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(f.from_i64(i)),
            None => schema(path, "expected an integer or \"num/den\""),
        },
        Value::String(s) => f.parse(s).or_else(|e| schema(path, e.to_string())),
        _ => schema(path, "expected an integer or \"num/den\""),
    }
}

fn vector(v: &Value, f: Field, path: &str, len: usize) -> CliResult<Vec<Scalar>> {
    let Value::Array(items) = v else {
        return schema(path, "expected an array");
    };
    if items.len() != len {
        return schema(path, format!("expected {len} entries, found {}", items.len()));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, x)| scalar(x, f, &format!("{path}[{i}]")))
        .collect()
}

fn matrix(v: &Value, f: Field, path: &str, rows: usize, cols: usize) -> CliResult<Mat> {
    let Value::Array(items) = v else {
        return schema(path, "expected an array of rows");
    };
    if items.len() != rows {
        return schema(path, format!("expected {rows} rows, found {}", items.len()));
    }
    let data = items
        .iter()
        .enumerate()
        .map(|(i, r)| vector(r, f, &format!("{path}[{i}]"), cols))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Mat::new(f, rows, cols, data.into_iter().flatten().collect()))
}

/// `t[i][j][l]` as the map `X ⊗ Y → Z` with column `i·d1 + j`.
fn tensor3(v: &Value, f: Field, path: &str, d0: usize, d1: usize, d2: usize) -> CliResult<Mat> {
    let Value::Array(items) = v else {
        return schema(path, "expected an array of matrices");
    };
    if items.len() != d0 {
        return schema(path, format!("expected {d0} matrices, found {}", items.len()));
    }
    let mut out = Mat::zeros(f, d2, d0 * d1);
    for (i, m) in items.iter().enumerate() {
        let slice = matrix(m, f, &format!("{path}[{i}]"), d1, d2)?;
        for j in 0..d1 {
            for l in 0..d2 {
                out.set(l, i * d1 + j, slice.get(j, l).clone());
            }
        }
    }
    Ok(out)
}

fn left_action(v: &Value, f: Field, path: &str, alg: usize, dim: usize) -> CliResult<Mat> {
    tensor3(v, f, path, alg, dim, dim)
}

fn right_action(v: &Value, f: Field, path: &str, dim: usize, alg: usize) -> CliResult<Mat> {
    tensor3(v, f, path, dim, alg, dim)
}

pub fn mat_json(m: &Mat) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(Scalar::to_json).collect()))
            .collect(),
    )
}

/// Inverse of the 3-tensor reading: `t[i][j][l] = m[l][i·d1 + j]`.
pub fn tensor_json(m: &Mat, d0: usize, d1: usize) -> Value {
    Value::Array(
        (0..d0)
            .map(|i| {
                Value::Array(
                    (0..d1)
                        .map(|j| Value::Array((0..m.rows()).map(|l| m.get(l, i * d1 + j).to_json()).collect()))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn algebra_json(a: &Algebra) -> Value {
    json!({
        "dim": a.dim(),
        "mult": tensor_json(a.mult(), a.dim(), a.dim()),
        "unit": Value::Array(a.unit().col_vec(0).iter().map(Scalar::to_json).collect()),
    })
}

fn comodule_json(m: &Comodule) -> Value {
    json!({
        "dim": m.dim(),
        "action": tensor_json(&m.module.act, m.dim(), m.module.alg.dim()),
        "rho": mat_json(&m.rho),
    })
}

fn extension_json(e: &CoringExtension) -> Value {
    json!({
        "dim": e.c.dim(),
        "ract": tensor_json(&e.ract, e.c.dim(), e.d.alg.dim()),
        "sigma": mat_json(&e.sigma),
    })
}

fn datum_json(d: &DescentDatum) -> Value {
    json!({
        "dim": d.dim(),
        "action": tensor_json(&d.module.act, d.dim(), d.module.alg.dim()),
        "f": mat_json(&d.f),
    })
}

/// A command and its named arguments.
#[derive(Clone, Debug)]
pub enum Command {
    Check { object: Option<String> },
    DualRing { coring: String },
    EnumerateMeasurings { coring: String, algebra: String },
    Induce { extension: String, comodule: String },
    Apply { extension: String, map: String },
    Compose { first: String, second: String },
    Descent { chain: String, datum: Option<String> },
}

fn expect_coring(ws: &Workspace, name: &str, path: &str) -> CliResult<Coring> {
    match ws.get(name, path)? {
        Object::Coring(c) => Ok(c),
        Object::Coalgebra(c) => Ok(c.to_coring()),
        o => schema(path, format!("expected a coring, found {}", o.kind())),
    }
}

fn expect_extension(ws: &Workspace, name: &str, path: &str) -> CliResult<CoringExtension> {
    match ws.get(name, path)? {
        Object::Extension(e) => Ok(e),
        Object::Coring(c) => Ok(CoringExtension::identity(&c)),
        o => schema(path, format!("expected an extension, found {}", o.kind())),
    }
}

/// Runs one command; the report is deterministic for identical inputs.
pub fn run(command: &Command, ws: &Workspace) -> CliResult<Value> {
    let math = |name: &str| {
        let name = name.to_string();
        move |e: Error| classify(&name, "$", e)
    };
    match command {
        Command::Check { object } => {
            let names: Vec<String> = match object {
                Some(n) => vec![n.clone()],
                None => ws.declared.clone(),
            };
            let mut objects = Map::new();
            for n in names {
                let o = ws.get(&n, "--object")?;
                let mut entry = json!({"kind": o.kind(), "status": "pass"});
                if let Some(d) = o.dim() {
                    entry["dim"] = json!(d);
                }
                objects.insert(n, entry);
            }
            Ok(json!({"command": "check", "status": "pass", "objects": objects}))
        }
        Command::DualRing { coring } => {
            let c = expect_coring(ws, coring, "--coring")?;
            let dual = dual_ring(&c).map_err(math(coring))?;
            let basis: Vec<Value> = dual.basis.iter().map(mat_json).collect();
            Ok(json!({
                "command": "dualring",
                "status": "pass",
                "coring": coring,
                "algebra": algebra_json(&dual.alg),
                "basis": basis,
            }))
        }
        Command::EnumerateMeasurings { coring, algebra } => {
            let c = expect_coring(ws, coring, "--coring")?;
            let b = match ws.get(algebra, "--algebra")? {
                Object::Algebra(a) => a,
                o => return schema("--algebra", format!("expected an algebra, found {}", o.kind())),
            };
            let ms = enumerate_measurings(&c, &b).map_err(math(coring))?;
            let dual = dual_ring(&c).map_err(math(coring))?;
            let mut listed = Vec::new();
            for m in &ms {
                let chi = measuring_to_algebra_map(m, &dual).map_err(math(coring))?;
                listed.push(json!({"nu": mat_json(&m.nu), "algebra_map": mat_json(&chi.matrix)}));
            }
            Ok(json!({
                "command": "enumerate-measurings",
                "status": "pass",
                "coring": coring,
                "algebra": algebra,
                "count": ms.len(),
                "measurings": listed,
            }))
        }
        Command::Induce { extension, comodule } => {
            let e = expect_extension(ws, extension, "--extension")?;
            let m = match ws.get(comodule, "--comodule")? {
                Object::Comodule(m) => m,
                Object::Coring(c) => Comodule::regular(&c),
                o => return schema("--comodule", format!("expected a comodule, found {}", o.kind())),
            };
            let out = induced_coaction(&e, &m).map_err(math(comodule))?;
            Ok(json!({
                "command": "induce",
                "status": "pass",
                "extension": extension,
                "comodule": comodule,
                "result": comodule_json(&out),
            }))
        }
        Command::Apply { extension, map } => {
            let e = expect_extension(ws, extension, "--extension")?;
            let f = match ws.get(map, "--map")? {
                Object::ComoduleMap(f) => f,
                o => return schema("--map", format!("expected a comodule map, found {}", o.kind())),
            };
            let out = apply_functor(&e, &f.matrix, &f.source, &f.target).map_err(math(map))?;
            Ok(json!({
                "command": "apply",
                "status": "pass",
                "extension": extension,
                "map": map,
                "matrix": mat_json(&out),
            }))
        }
        Command::Compose { first, second } => {
            let e1 = expect_extension(ws, first, "--first")?;
            let e2 = expect_extension(ws, second, "--second")?;
            let out = compose_extensions(&e1, &e2).map_err(math(second))?;
            Ok(json!({
                "command": "compose",
                "status": "pass",
                "first": first,
                "second": second,
                "result": extension_json(&out),
            }))
        }
        Command::Descent { chain, datum } => {
            let data = match ws.get(chain, "--chain")? {
                Object::Chain(d) => d,
                o => return schema("--chain", format!("expected a descent chain, found {}", o.kind())),
            };
            let ext = chain_extension(&data).map_err(math(chain))?;
            let mut report = json!({
                "command": "descent",
                "status": "pass",
                "chain": chain,
                "extension": extension_json(&ext),
            });
            if let Some(dn) = datum {
                let d = match ws.get(dn, "--datum")? {
                    Object::DescentDatum(d) => d,
                    o => return schema("--datum", format!("expected a descent datum, found {}", o.kind())),
                };
                let out = descent_functor(&data, &d).map_err(math(dn))?;
                report["datum"] = json!(dn);
                report["result"] = datum_json(&out);
            }
            Ok(report)
        }
    }
}

/// Loads (if given) and runs; returns the report text and exit code.
pub fn execute(workspace: Option<&str>, default_field: Field, command: &Command) -> (String, i32) {
    let outcome = match workspace {
        Some(text) => Workspace::parse(text),
        None => Ok(Workspace::empty(default_field)),
    }
    .and_then(|ws| run(command, &ws));
    let (value, code) = match outcome {
        Ok(v) => (v, EXIT_OK),
        Err(e) => (e.report(), e.exit_code()),
    };
    let text = serde_json::to_string_pretty(&value).expect("report serializes");
    (text, code)
}
