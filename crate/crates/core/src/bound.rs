//! Counting bound over odd-index maximal subgroups, in exact arithmetic.
//!
//! For a class `x^S` and a Sylow 2-subgroup `P`, the left-hand side is
//! `[N_S(P):P] * sum_M 1_M^S(x) / 1_M^S(1)`, summed over the odd-index
//! maximal subgroups `M` up to conjugacy.

use std::fmt;
use std::path::Path;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::coset::CosetAction;
use crate::error::{Error, Result};
use crate::group::{GroupHandle, Limits};
use crate::perm::Permutation;
use crate::ser;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDatum {
    pub name: String,
    pub size: BigUint,
    pub order: u64,
    /// 1-indexed cycle notation.
    pub representative: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermCharColumn {
    pub label: String,
    pub degree: BigUint,
    pub values: Vec<BigUint>,
    pub generators: Option<Vec<String>>,
    /// Replaces `[N_S(P):P]` for this column when present.
    pub normalizer_override: Option<BigUint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundInput {
    pub group: String,
    pub order: BigUint,
    pub normalizer_index: BigUint,
    pub classes: Vec<ClassDatum>,
    pub maximals: Vec<PermCharColumn>,
    /// Permutation degree of `generators`, when the group itself is bundled.
    pub degree: Option<usize>,
    pub generators: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    SizeSum {
        expected: BigUint,
        found: BigUint,
    },
    SizeDivides {
        class: String,
    },
    NoIdentityClass,
    ValueCount {
        column: String,
        expected: usize,
        found: usize,
    },
    ZeroDegree {
        column: String,
    },
    IdentityValue {
        column: String,
        class: String,
    },
    ValueRange {
        column: String,
        class: String,
    },
    Burnside {
        column: String,
        expected: BigUint,
        found: BigUint,
    },
    NonIntegral {
        column: String,
        class: String,
        value: BigRational,
    },
    NormalizerIndex,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SizeSum { expected, found } => {
                write!(f, "class sizes sum to {found}, group order is {expected}")
            }
            Violation::SizeDivides { class } => write!(f, "class {class}: size does not divide the group order"),
            Violation::NoIdentityClass => write!(f, "no class of element order 1 and size 1"),
            Violation::ValueCount {
                column,
                expected,
                found,
            } => {
                write!(f, "column {column}: {found} values for {expected} classes")
            }
            Violation::ZeroDegree { column } => write!(f, "column {column}: degree 0"),
            Violation::IdentityValue { column, class } => {
                write!(
                    f,
                    "column {column}, class {class}: identity value differs from the degree"
                )
            }
            Violation::ValueRange { column, class } => {
                write!(f, "column {column}, class {class}: value exceeds the degree")
            }
            Violation::Burnside {
                column,
                expected,
                found,
            } => write!(
                f,
                "column {column}: sum of size*value is {found}, group order is {expected}"
            ),
            Violation::NonIntegral { column, class, value } => write!(
                f,
                "column {column}, class {class}: |x^S n M| = {value} is not an integer"
            ),
            Violation::NormalizerIndex => write!(f, "normalizer index must be at least 1"),
        }
    }
}

/// `|x^S ∩ M| = |x^S| * value / degree`, with a flag for integrality.
pub fn class_intersection_size(size: &BigUint, value: &BigUint, degree: &BigUint) -> Result<(BigRational, bool)> {
    if degree.is_zero() {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    let r = BigRational::new(BigInt::from(size * value), BigInt::from(degree.clone()));
    let integral = r.is_integer();
    Ok((r, integral))
}

/// Every invariant violation of the data, in a stable order.
pub fn consistency_check(input: &BoundInput) -> Vec<Violation> {
    let mut out = Vec::new();
    if input.normalizer_index.is_zero() {
        out.push(Violation::NormalizerIndex);
    }
    let sum: BigUint = input.classes.iter().map(|c| &c.size).sum();
    if sum != input.order {
        out.push(Violation::SizeSum {
            expected: input.order.clone(),
            found: sum,
        });
    }
    for c in &input.classes {
        if c.size.is_zero() || !input.order.is_multiple_of(&c.size) {
            out.push(Violation::SizeDivides { class: c.name.clone() });
        }
    }
    let identity = input.classes.iter().position(|c| c.order == 1 && c.size.is_one());
    if identity.is_none() {
        out.push(Violation::NoIdentityClass);
    }
    for col in &input.maximals {
        if col.values.len() != input.classes.len() {
            out.push(Violation::ValueCount {
                column: col.label.clone(),
                expected: input.classes.len(),
                found: col.values.len(),
            });
            continue;
        }
        if col.degree.is_zero() {
            out.push(Violation::ZeroDegree {
                column: col.label.clone(),
            });
            continue;
        }
        if let Some(i) = identity {
            if col.values[i] != col.degree {
                out.push(Violation::IdentityValue {
                    column: col.label.clone(),
                    class: input.classes[i].name.clone(),
                });
            }
        }
        let mut burnside = BigUint::zero();
        for (c, v) in input.classes.iter().zip(&col.values) {
            if v > &col.degree {
                out.push(Violation::ValueRange {
                    column: col.label.clone(),
                    class: c.name.clone(),
                });
            }
            burnside += &c.size * v;
            let (r, integral) = class_intersection_size(&c.size, v, &col.degree).expect("degree checked");
            if !integral {
                out.push(Violation::NonIntegral {
                    column: col.label.clone(),
                    class: c.name.clone(),
                    value: r,
                });
            }
        }
        if burnside != input.order {
            out.push(Violation::Burnside {
                column: col.label.clone(),
                expected: input.order.clone(),
                found: burnside,
            });
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundRow {
    pub class: String,
    #[serde(serialize_with = "ser::rational")]
    pub lhs: BigRational,
    pub below_one: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub group: String,
    #[serde(serialize_with = "ser::big")]
    pub normalizer_index: BigUint,
    pub rows: Vec<BoundRow>,
    #[serde(serialize_with = "ser::rational")]
    pub max: BigRational,
    /// Every class attaining the maximum.
    pub max_classes: Vec<String>,
    pub all_below_one: bool,
}

impl BoundReport {
    pub fn row(&self, class: &str) -> Option<&BoundRow> {
        self.rows.iter().find(|r| r.class == class)
    }
}

/// Evaluates the left-hand side for every nonidentity class.
pub fn sporadic_bound(input: &BoundInput) -> BoundReport {
    let mut rows = Vec::new();
    for (i, c) in input.classes.iter().enumerate() {
        if c.order == 1 {
            continue;
        }
        let mut lhs = BigRational::zero();
        for col in &input.maximals {
            let factor = col.normalizer_override.as_ref().unwrap_or(&input.normalizer_index);
            lhs += BigRational::new(BigInt::from(factor * &col.values[i]), BigInt::from(col.degree.clone()));
        }
        rows.push(BoundRow {
            class: c.name.clone(),
            below_one: lhs < BigRational::one(),
            lhs,
        });
    }
    let max = rows
        .iter()
        .map(|r| r.lhs.clone())
        .max()
        .unwrap_or_else(BigRational::zero);
    let max_classes = rows.iter().filter(|r| r.lhs == max).map(|r| r.class.clone()).collect();
    BoundReport {
        group: input.group.clone(),
        normalizer_index: input.normalizer_index.clone(),
        all_below_one: rows.iter().all(|r| r.below_one),
        rows,
        max,
        max_classes,
    }
}

/// Permutation character of `g` on the cosets of `m`, at each representative.
pub fn perm_character_from_subgroup(
    g: &GroupHandle,
    m: &GroupHandle,
    representatives: &[Permutation],
    label: &str,
    limits: &Limits,
) -> Result<PermCharColumn> {
    let action = CosetAction::new(g, m, limits)?;
    let values = representatives
        .iter()
        .map(|x| action.fixed_cosets(x).map(BigUint::from))
        .collect::<Result<Vec<_>>>()?;
    Ok(PermCharColumn {
        label: label.to_string(),
        degree: BigUint::from(action.degree()),
        values,
        generators: Some(m.generators().iter().map(|p| p.to_cycle_string()).collect()),
        normalizer_override: None,
    })
}

fn big_field(v: &Value, what: &str) -> Result<BigUint> {
    let bad = || Error::BoundData(format!("{what}: expected a nonnegative integer"));
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| bad()),
        Value::Number(n) => n.as_u64().map(BigUint::from).ok_or_else(bad),
        _ => Err(bad()),
    }
}

fn str_field<'a>(obj: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a str> {
    obj.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| Error::BoundData(format!("{what}: missing string field `{key}`")))
}

fn str_list(v: &Value, what: &str) -> Result<Vec<String>> {
    v.as_array()
        .ok_or_else(|| Error::BoundData(format!("{what}: expected a list of strings")))?
        .iter()
        .map(|s| {
            s.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::BoundData(format!("{what}: expected a list of strings")))
        })
        .collect()
}

/// Parses bound-input JSON without checking invariants. Integers may be
/// given as JSON numbers or decimal strings.
pub fn parse_bound_input(text: &str) -> Result<BoundInput> {
    let root: Value = serde_json::from_str(text)?;
    let obj = root
        .as_object()
        .ok_or_else(|| Error::BoundData("top level must be an object".into()))?;
    let group = str_field(obj, "group", "top level")?.to_string();
    let order = big_field(obj.get("order").unwrap_or(&Value::Null), "order")?;
    let normalizer_index = big_field(obj.get("normalizer_index").unwrap_or(&Value::Null), "normalizer_index")?;
    let degree = match obj.get("degree") {
        None | Some(Value::Null) => None,
        Some(v) => Some(
            v.as_u64()
                .filter(|&d| d > 0)
                .ok_or_else(|| Error::BoundData("degree: expected a positive integer".into()))? as usize,
        ),
    };
    let generators = obj.get("generators").map(|v| str_list(v, "generators")).transpose()?;
    let mut classes = Vec::new();
    let class_list = obj
        .get("classes")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::BoundData("missing list `classes`".into()))?;
    for (i, c) in class_list.iter().enumerate() {
        let what = format!("classes[{i}]");
        let co = c
            .as_object()
            .ok_or_else(|| Error::BoundData(format!("{what}: expected an object")))?;
        let name = str_field(co, "name", &what)?.to_string();
        let size = big_field(co.get("size").unwrap_or(&Value::Null), &format!("{what}.size"))?;
        let order = co
            .get("order")
            .and_then(|v| v.as_u64().or_else(|| v.as_str().and_then(|s| s.parse().ok())))
            .ok_or_else(|| Error::BoundData(format!("{what}.order: expected an integer")))?;
        let representative = match co.get("representative") {
            None | Some(Value::Null) => None,
            Some(v) => Some(
                v.as_str()
                    .ok_or_else(|| Error::BoundData(format!("{what}.representative: expected a string")))?
                    .to_string(),
            ),
        };
        classes.push(ClassDatum {
            name,
            size,
            order,
            representative,
        });
    }
    let mut maximals = Vec::new();
    let max_list = obj
        .get("maximals")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::BoundData("missing list `maximals`".into()))?;
    for (i, m) in max_list.iter().enumerate() {
        let what = format!("maximals[{i}]");
        let mo = m
            .as_object()
            .ok_or_else(|| Error::BoundData(format!("{what}: expected an object")))?;
        let label = str_field(mo, "label", &what)?.to_string();
        let degree = big_field(mo.get("degree").unwrap_or(&Value::Null), &format!("{what}.degree"))?;
        let values = mo
            .get("values")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::BoundData(format!("{what}: missing list `values`")))?
            .iter()
            .enumerate()
            .map(|(j, v)| big_field(v, &format!("{what}.values[{j}]")))
            .collect::<Result<Vec<_>>>()?;
        let generators = mo
            .get("generators")
            .map(|v| str_list(v, &format!("{what}.generators")))
            .transpose()?;
        let normalizer_override = match mo.get("normalizer_override") {
            None | Some(Value::Null) => None,
            Some(v) => Some(big_field(v, &format!("{what}.normalizer_override"))?),
        };
        maximals.push(PermCharColumn {
            label,
            degree,
            values,
            generators,
            normalizer_override,
        });
    }
    Ok(BoundInput {
        group,
        order,
        normalizer_index,
        classes,
        maximals,
        degree,
        generators,
    })
}

/// Parses and validates; the first violation decides the error kind.
pub fn ingest_bound_input(text: &str) -> Result<BoundInput> {
    let input = parse_bound_input(text)?;
    let violations = consistency_check(&input);
    if violations.is_empty() {
        return Ok(input);
    }
    if let Some(Violation::SizeSum { expected, found }) =
        violations.iter().find(|v| matches!(v, Violation::SizeSum { .. }))
    {
        return Err(Error::SizeSum {
            expected: expected.to_string(),
            found: found.to_string(),
        });
    }
    if let Some(Violation::Burnside {
        column,
        expected,
        found,
    }) = violations.iter().find(|v| matches!(v, Violation::Burnside { .. }))
    {
        return Err(Error::BurnsideSum {
            column: column.clone(),
            expected: expected.to_string(),
            found: found.to_string(),
        });
    }
    let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
    Err(Error::BoundData(list.join("; ")))
}

pub fn read_bound_file(path: impl AsRef<Path>) -> Result<BoundInput> {
    ingest_bound_input(&std::fs::read_to_string(path)?)
}

impl BoundInput {
    /// JSON form with big integers as decimal strings.
    pub fn to_json(&self) -> Value {
        let mut root = Map::new();
        root.insert("group".into(), json!(self.group));
        root.insert("order".into(), json!(self.order.to_string()));
        root.insert("normalizer_index".into(), json!(self.normalizer_index.to_string()));
        if let Some(d) = self.degree {
            root.insert("degree".into(), json!(d));
        }
        if let Some(g) = &self.generators {
            root.insert("generators".into(), json!(g));
        }
        let classes: Vec<Value> = self
            .classes
            .iter()
            .map(|c| {
                let mut o = Map::new();
                o.insert("name".into(), json!(c.name));
                o.insert("size".into(), json!(c.size.to_string()));
                o.insert("order".into(), json!(c.order));
                if let Some(r) = &c.representative {
                    o.insert("representative".into(), json!(r));
                }
                Value::Object(o)
            })
            .collect();
        root.insert("classes".into(), Value::Array(classes));
        let maximals: Vec<Value> = self
            .maximals
            .iter()
            .map(|m| {
                let mut o = Map::new();
                o.insert("label".into(), json!(m.label));
                o.insert("degree".into(), json!(m.degree.to_string()));
                o.insert(
                    "values".into(),
                    json!(m.values.iter().map(|v| v.to_string()).collect::<Vec<_>>()),
                );
                if let Some(g) = &m.generators {
                    o.insert("generators".into(), json!(g));
                }
                if let Some(n) = &m.normalizer_override {
                    o.insert("normalizer_override".into(), json!(n.to_string()));
                }
                Value::Object(o)
            })
            .collect();
        root.insert("maximals".into(), Value::Array(maximals));
        Value::Object(root)
    }

    /// The bundled group, if the file carries generators.
    pub fn group_handle(&self) -> Result<Option<GroupHandle>> {
        match (&self.degree, &self.generators) {
            (Some(d), Some(gens)) => Ok(Some(handle_from_strings(*d, gens)?)),
            (None, None) => Ok(None),
            _ => Err(Error::BoundData(
                "`degree` and `generators` must be given together".into(),
            )),
        }
    }

    /// Class representatives, when every class carries one.
    pub fn representatives(&self) -> Result<Option<Vec<Permutation>>> {
        let Some(d) = self.degree else { return Ok(None) };
        if self.classes.iter().any(|c| c.representative.is_none()) {
            return Ok(None);
        }
        self.classes
            .iter()
            .map(|c| Permutation::parse_cycles(c.representative.as_deref().unwrap_or("()"), d))
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }
}

/// Group from 1-indexed cycle strings; trivial if all are the identity.
pub fn handle_from_strings(degree: usize, gens: &[String]) -> Result<GroupHandle> {
    let perms = gens
        .iter()
        .map(|s| Permutation::parse_cycles(s, degree))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupHandle::trivial(degree).subgroup(perms))
}
