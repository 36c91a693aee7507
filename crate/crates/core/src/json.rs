//! JSON file formats.
//!
//! Every rational is written as a string: `"p"` for integers, `"p/q"`
//! otherwise. Readers also accept JSON integers where a rational is expected.

use serde_json::{json, Map, Value};

use crate::complex::{AbelianGroupDescription, BasedChainComplex, HomologyBasis, TorsionValue};
use crate::error::{Error, Result};
use crate::group::{GroupPresentation, Word};
use crate::linalg::{
    format_rational, parse_rational, Integer, IntegerMatrix, Rational, RationalMatrix, SnfResult,
};
use crate::localization::{BwPartition, EtaPrefactor, ExteriorClass, LevelPolynomial};
use crate::partition::{ComparisonReport, REPORT_VERSION};
use crate::twisted::{GroupRingComplex, GroupRingElement, GroupRingMatrix, Representation};

/// Syntax error in a JSON document, located by byte offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonSyntaxError {
    pub message: String,
    pub line: usize,
    pub column: usize,
    pub offset: usize,
}

impl std::fmt::Display for JsonSyntaxError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at byte offset {}", self.message, self.offset)
    }
}

/// Parses JSON text, reporting syntax errors with a byte offset.
pub fn parse_text(text: &str) -> std::result::Result<Value, JsonSyntaxError> {
    serde_json::from_str(text).map_err(|e| {
        let (line, column) = (e.line(), e.column());
        let full = e.to_string();
        let suffix = format!(" at line {line} column {column}");
        let message = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
        JsonSyntaxError { message, line, column, offset: byte_offset(text, line, column) }
    })
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let line_start: usize = text.split_inclusive('\n').take(line - 1).map(str::len).sum();
    (line_start + column.saturating_sub(1)).min(text.len())
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name).ok_or_else(|| parse_err(format!("missing field `{name}`")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("`{what}` must be an array")))
}

fn as_count(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| parse_err(format!("`{what}` must be a non-negative integer")))
}

fn as_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        _ => Err(parse_err(format!("expected a rational literal, got {v}"))),
    }
}

fn as_integer(v: &Value) -> Result<Integer> {
    let r = as_rational(v)?;
    if !r.is_integer() {
        return Err(parse_err(format!("expected an integer, got {r}")));
    }
    Ok(r.to_integer())
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn integer_to_json(x: &Integer) -> Value {
    Value::String(x.to_string())
}

fn vector_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

// ---- matrices ----

pub fn matrix_to_json(m: &RationalMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.entries().iter().map(rational_to_json).collect::<Vec<_>>(),
    })
}

pub fn matrix_from_json(v: &Value) -> Result<RationalMatrix> {
    let rows = as_count(field(v, "rows")?, "rows")?;
    let cols = as_count(field(v, "cols")?, "cols")?;
    let entries =
        as_array(field(v, "entries")?, "entries")?.iter().map(as_rational).collect::<Result<Vec<_>>>()?;
    RationalMatrix::from_vec(rows, cols, entries).map_err(|e| parse_err(e.to_string()))
}

pub fn integer_matrix_to_json(m: &IntegerMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.entries().iter().map(integer_to_json).collect::<Vec<_>>(),
    })
}

pub fn integer_matrix_from_json(v: &Value) -> Result<IntegerMatrix> {
    let m = matrix_from_json(v)?;
    if let Some(x) = m.entries().iter().find(|x| !x.is_integer()) {
        return Err(parse_err(format!("integer matrix has non-integer entry {x}")));
    }
    Ok(m.map(Rational::to_integer))
}

pub fn snf_to_json(s: &SnfResult) -> Value {
    json!({
        "u": integer_matrix_to_json(&s.u),
        "d": integer_matrix_to_json(&s.d),
        "v": integer_matrix_to_json(&s.v),
        "invariant_factors": s.invariant_factors().iter().map(integer_to_json).collect::<Vec<_>>(),
    })
}

// ---- chain complexes ----

pub fn complex_to_json(c: &BasedChainComplex) -> Value {
    json!({
        "degrees": c.degrees(),
        "boundaries": c.boundaries().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

/// Reads and validates a complex.
pub fn complex_from_json(v: &Value) -> Result<BasedChainComplex> {
    let degrees = as_array(field(v, "degrees")?, "degrees")?
        .iter()
        .map(|d| as_count(d, "degrees"))
        .collect::<Result<Vec<_>>>()?;
    let boundaries = as_array(field(v, "boundaries")?, "boundaries")?
        .iter()
        .map(matrix_from_json)
        .collect::<Result<Vec<_>>>()?;
    BasedChainComplex::new(degrees, boundaries)
}

pub fn homology_basis_to_json(h: &HomologyBasis) -> Value {
    Value::Array(
        h.per_degree()
            .iter()
            .enumerate()
            .filter(|(_, vs)| !vs.is_empty())
            .map(|(i, vs)| {
                json!({ "degree": i, "vectors": vs.iter().map(|v| vector_to_json(v)).collect::<Vec<_>>() })
            })
            .collect(),
    )
}

/// Accepts a single `{"degree", "vectors"}` object or an array of them.
pub fn homology_basis_from_json(v: &Value) -> Result<HomologyBasis> {
    let items: Vec<&Value> = match v {
        Value::Array(a) => a.iter().collect(),
        Value::Object(_) => vec![v],
        _ => return Err(parse_err("homology basis must be an object or array")),
    };
    let mut h = HomologyBasis::empty();
    for item in items {
        let degree = as_count(field(item, "degree")?, "degree")?;
        let vectors = as_array(field(item, "vectors")?, "vectors")?
            .iter()
            .map(|vec| as_array(vec, "vectors")?.iter().map(as_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        h.set_degree(degree, vectors);
    }
    Ok(h)
}

pub fn torsion_to_json(t: &TorsionValue) -> Value {
    json!({
        "magnitude": rational_to_json(&t.magnitude),
        "sign": t.sign,
        "basis_order": "lifts,boundaries,homology",
    })
}

pub fn abelian_group_to_json(g: &AbelianGroupDescription) -> Value {
    json!({
        "free_rank": g.free_rank,
        "torsion_coefficients": g.torsion_coefficients.iter().map(integer_to_json).collect::<Vec<_>>(),
    })
}

// ---- groups ----

fn word_to_json(p: &GroupPresentation, w: &Word) -> Value {
    Value::Array(w.letters().iter().map(|l| json!([p.generators()[l.generator], l.exponent()])).collect())
}

fn word_from_json(generators: &[String], v: &Value) -> Result<Vec<(String, i64)>> {
    as_array(v, "word")?
        .iter()
        .map(|letter| {
            let pair = as_array(letter, "letter")?;
            match pair.as_slice() {
                [Value::String(name), e] => {
                    let e = e.as_i64().ok_or_else(|| parse_err("letter exponent must be an integer"))?;
                    if !generators.contains(name) {
                        return Err(Error::UnknownGenerator(name.clone()));
                    }
                    Ok((name.clone(), e))
                }
                _ => Err(parse_err(format!("letter must be [name, exponent], got {letter}"))),
            }
        })
        .collect()
}

pub fn presentation_to_json(p: &GroupPresentation) -> Value {
    json!({
        "generators": p.generators(),
        "relators": p.relators().iter().map(|w| word_to_json(p, w)).collect::<Vec<_>>(),
    })
}

pub fn presentation_from_json(v: &Value) -> Result<GroupPresentation> {
    let generators = as_array(field(v, "generators")?, "generators")?
        .iter()
        .map(|g| g.as_str().map(str::to_string).ok_or_else(|| parse_err("generator names must be strings")))
        .collect::<Result<Vec<_>>>()?;
    let relators = as_array(field(v, "relators")?, "relators")?
        .iter()
        .map(|r| word_from_json(&generators, r))
        .collect::<Result<Vec<_>>>()?;
    GroupPresentation::from_named(generators, &relators)
}

pub fn representation_to_json(rho: &Representation) -> Value {
    let images: Map<String, Value> = rho
        .presentation()
        .generators()
        .iter()
        .zip(rho.images())
        .map(|(g, m)| (g.clone(), matrix_to_json(m)))
        .collect();
    json!({ "dimension": rho.dimension(), "images": images })
}

pub fn representation_from_json(p: &GroupPresentation, v: &Value) -> Result<Representation> {
    let dimension = as_count(field(v, "dimension")?, "dimension")?;
    let images = field(v, "images")?.as_object().ok_or_else(|| parse_err("`images` must be an object"))?;
    if let Some(extra) = images.keys().find(|k| p.generator_index(k).is_none()) {
        return Err(Error::UnknownGenerator(extra.clone()));
    }
    let mats = p
        .generators()
        .iter()
        .map(|g| {
            let m = matrix_from_json(
                images.get(g).ok_or_else(|| parse_err(format!("no image for generator `{g}`")))?,
            )?;
            if m.rows() != dimension || m.cols() != dimension {
                return Err(Error::DimensionMismatch(format!(
                    "image of `{g}` is {}x{}, declared dimension {dimension}",
                    m.rows(),
                    m.cols()
                )));
            }
            Ok(m)
        })
        .collect::<Result<Vec<_>>>()?;
    if mats.is_empty() {
        return Ok(Representation::trivial(p, dimension));
    }
    Representation::new(p, mats)
}

fn group_ring_element_to_json(p: &GroupPresentation, e: &GroupRingElement) -> Value {
    Value::Array(e.terms().map(|(w, c)| json!([integer_to_json(c), word_to_json(p, w)])).collect())
}

/// Rows of entries; each entry a list of `[coefficient, word]` pairs.
pub fn group_ring_matrix_to_json(p: &GroupPresentation, m: &GroupRingMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| {
                Value::Array((0..m.cols()).map(|c| group_ring_element_to_json(p, m.get(r, c))).collect())
            })
            .collect(),
    )
}

pub fn group_ring_complex_to_json(c: &GroupRingComplex) -> Value {
    let p = c.presentation();
    json!({
        "degrees": c.degrees(),
        "boundaries": c.boundaries().iter().map(|m| group_ring_matrix_to_json(p, m)).collect::<Vec<_>>(),
    })
}

pub fn group_ring_matrix_from_json(p: &GroupPresentation, v: &Value) -> Result<GroupRingMatrix> {
    let rows = as_array(v, "group ring matrix")?;
    let mut entries = Vec::new();
    let mut cols = None;
    for row in rows {
        let row = as_array(row, "row")?;
        if *cols.get_or_insert(row.len()) != row.len() {
            return Err(parse_err("ragged group ring matrix"));
        }
        for entry in row {
            let mut e = GroupRingElement::default();
            for term in as_array(entry, "entry")? {
                let pair = as_array(term, "term")?;
                let [c, w] = pair.as_slice() else {
                    return Err(parse_err("group ring term must be [coefficient, word]"));
                };
                let letters = word_from_json(p.generators(), w)?;
                let single = GroupPresentation::from_named(p.generators().to_vec(), &[letters])?;
                e = e + GroupRingElement::term(as_integer(c)?, &single.relators()[0]);
            }
            entries.push(e);
        }
    }
    GroupRingMatrix::from_vec(rows.len(), cols.unwrap_or(0), entries).map_err(|e| parse_err(e.to_string()))
}

// ---- localization ----

pub fn level_polynomial_to_json(p: &LevelPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(rational_to_json).collect())
}

pub fn exterior_class_to_json(a: &ExteriorClass) -> Value {
    json!({
        "genus": a.genus(),
        "terms": a
            .terms()
            .map(|(mask, c)| json!({
                "generators": ExteriorClass::indices(mask),
                "coeff": level_polynomial_to_json(c),
            }))
            .collect::<Vec<_>>(),
    })
}

/// `coeff` may be a flat coefficient list or a list wrapping one.
pub fn exterior_class_from_json(v: &Value) -> Result<ExteriorClass> {
    let genus = as_count(field(v, "genus")?, "genus")?;
    if genus > 32 {
        return Err(parse_err("genus above 32 is not supported"));
    }
    let mut out = ExteriorClass::zero(genus);
    for term in as_array(field(v, "terms")?, "terms")? {
        let gens = as_array(field(term, "generators")?, "generators")?
            .iter()
            .map(|g| as_count(g, "generators"))
            .collect::<Result<Vec<_>>>()?;
        let mut coeff = as_array(field(term, "coeff")?, "coeff")?;
        if let [inner @ Value::Array(_)] = coeff.as_slice() {
            coeff = as_array(inner, "coeff")?;
        }
        let poly = LevelPolynomial::new(coeff.iter().map(as_rational).collect::<Result<Vec<_>>>()?);
        let mono = ExteriorClass::monomial(genus, &gens, poly)
            .ok_or_else(|| parse_err(format!("generator index out of range 1..={}", 2 * genus)))?;
        out = out.add(&mono)?;
    }
    Ok(out)
}

pub fn eta_to_json(e: &EtaPrefactor) -> Value {
    json!({
        "eta0": rational_to_json(&e.eta0),
        "angle_over_pi": rational_to_json(&e.angle_over_pi),
        "phase": e.phase.as_ref().map(|(c, s)| json!({ "cos": rational_to_json(c), "sin": rational_to_json(s) })),
    })
}

pub fn bw_partition_to_json(b: &BwPartition) -> Value {
    json!({
        "magnitude_polynomial": level_polynomial_to_json(&b.magnitude_polynomial),
        "magnitude": rational_to_json(&b.magnitude),
        "k_exponent": b.k_exponent,
        "phase": eta_to_json(&b.phase),
    })
}

// ---- comparison ----

pub fn report_to_json(r: &ComparisonReport) -> Value {
    json!({
        "report_version": REPORT_VERSION,
        "genus": r.genus,
        "euler_degree": r.euler_degree,
        "dim_H0": r.dim_h0,
        "dim_H1": r.dim_h1,
        "m_X": rational_to_json(&r.m_x),
        "manoliu_exponent": rational_to_json(&r.manoliu_exponent),
        "bw_exponent": rational_to_json(&r.bw_exponent),
        "exponent_difference": rational_to_json(&r.exponent_difference),
        "stabilizer_dimension": r.stabilizer_dimension,
        "stabilizer_explanation": r.stabilizer_explanation,
        "moduli_components": integer_to_json(&r.moduli_components),
        "moduli_description": r.moduli_description,
        "normalized_volume": rational_to_json(&r.normalized_volume),
        "degenerate_genus": r.degenerate_genus,
        "trivial_bundle_phase": rational_to_json(&r.trivial_bundle_phase),
        "notes": r.notes,
    })
}
