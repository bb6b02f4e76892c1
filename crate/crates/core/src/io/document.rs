use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde_json::Value;
use thiserror::Error;

use crate::clifford::MAX_GENERATORS;
use crate::error::{Error, Result};
use crate::projgeom::{Geometry, PointLabel};

/// Errors from [`parse_incidence`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema violation in `{field}`: {message}")]
    Schema { field: String, message: String },
    #[error("{message}: {}", offenders.join("; "))]
    Semantic {
        message: String,
        offenders: Vec<String>,
    },
}

fn schema(field: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Schema {
        field: field.into(),
        message: message.into(),
    }
}

/// An incidence structure as stored on disk.
///
/// ```json
/// {"name": str, "m": int?, "points": [[int...] | str ...], "lines": [[int...]...], "metadata": {str: str}?}
/// ```
///
/// Integer-list points are blade index sets (1-based generators); string
/// points are opaque names. Lines list 0-based point indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IncidenceDocument {
    pub name: String,
    pub m: Option<u32>,
    pub points: Vec<PointLabel>,
    pub lines: Vec<Vec<usize>>,
    pub metadata: BTreeMap<String, String>,
}

const KEYS: [&str; 5] = ["name", "m", "points", "lines", "metadata"];

fn parse_subset(field: &str, items: &[Value], m: Option<u32>) -> std::result::Result<u64, ParseError> {
    let limit = m.unwrap_or(MAX_GENERATORS);
    let mut bits = 0u64;
    for item in items {
        let j = item
            .as_u64()
            .ok_or_else(|| schema(field, "blade generators must be non-negative integers"))?;
        if j == 0 || j > limit as u64 {
            return Err(ParseError::Semantic {
                message: format!("generator index out of range 1..={limit}"),
                offenders: vec![format!("{field} contains {j}")],
            });
        }
        let bit = 1u64 << (j - 1);
        if bits & bit != 0 {
            return Err(ParseError::Semantic {
                message: "repeated generator in a blade".into(),
                offenders: vec![format!("{field} repeats {j}")],
            });
        }
        bits |= bit;
    }
    if bits == 0 {
        return Err(ParseError::Semantic {
            message: "the identity blade is not a point".into(),
            offenders: vec![format!("{field} is empty")],
        });
    }
    Ok(bits)
}

/// Parses and validates an incidence document.
pub fn parse_incidence(text: &str) -> std::result::Result<IncidenceDocument, ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ParseError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| schema("<root>", "expected a JSON object"))?;
    if let Some(k) = obj.keys().find(|k| !KEYS.contains(&k.as_str())) {
        return Err(schema(k.clone(), "unknown field"));
    }

    let name = match obj.get("name") {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(schema("name", "expected a string")),
    };
    let m = match obj.get("m") {
        None | Some(Value::Null) => None,
        Some(v) => {
            let m = v
                .as_u64()
                .ok_or_else(|| schema("m", "expected a non-negative integer"))?;
            if m > MAX_GENERATORS as u64 {
                return Err(schema("m", format!("at most {MAX_GENERATORS} generators supported")));
            }
            Some(m as u32)
        }
    };

    let raw_points = obj
        .get("points")
        .ok_or_else(|| schema("points", "missing"))?
        .as_array()
        .ok_or_else(|| schema("points", "expected an array"))?;
    let mut points = Vec::with_capacity(raw_points.len());
    for (i, p) in raw_points.iter().enumerate() {
        let field = format!("points[{i}]");
        points.push(match p {
            Value::Array(items) => PointLabel::Subset(parse_subset(&field, items, m)?),
            Value::String(s) => PointLabel::Name(s.clone()),
            _ => return Err(schema(field, "expected an integer list or a string")),
        });
    }
    let subsets = points.iter().filter(|p| p.subset_bits().is_some()).count();
    if subsets != 0 && subsets != points.len() {
        return Err(schema("points", "mixes blade subsets and string labels"));
    }
    let mut seen = HashSet::new();
    let dup: Vec<String> = points
        .iter()
        .enumerate()
        .filter(|(_, p)| !seen.insert(*p))
        .map(|(i, p)| format!("points[{i}] = {p}"))
        .collect();
    if !dup.is_empty() {
        return Err(ParseError::Semantic {
            message: "duplicate point labels".into(),
            offenders: dup,
        });
    }

    let raw_lines = obj
        .get("lines")
        .ok_or_else(|| schema("lines", "missing"))?
        .as_array()
        .ok_or_else(|| schema("lines", "expected an array"))?;
    let mut lines = Vec::with_capacity(raw_lines.len());
    for (j, l) in raw_lines.iter().enumerate() {
        let field = format!("lines[{j}]");
        let items = l.as_array().ok_or_else(|| schema(&field, "expected an array"))?;
        let line = items
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| schema(&field, "point indices must be non-negative integers"))?;
        lines.push(line);
    }
    let n = points.len();
    let out_of_range: Vec<String> = lines
        .iter()
        .enumerate()
        .flat_map(|(j, l)| {
            l.iter()
                .filter(|&&i| i >= n)
                .map(move |i| format!("lines[{j}] references point {i}"))
        })
        .collect();
    if !out_of_range.is_empty() {
        return Err(ParseError::Semantic {
            message: format!("point index out of range (there are {n} points)"),
            offenders: out_of_range,
        });
    }
    let repeated: Vec<String> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| {
            let mut s = (*l).clone();
            s.sort_unstable();
            s.windows(2).any(|w| w[0] == w[1])
        })
        .map(|(j, _)| format!("lines[{j}]"))
        .collect();
    if !repeated.is_empty() {
        return Err(ParseError::Semantic {
            message: "line repeats a point".into(),
            offenders: repeated,
        });
    }
    let mut by_key: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut dup_lines = Vec::new();
    for (j, l) in lines.iter().enumerate() {
        let mut key = l.clone();
        key.sort_unstable();
        if let Some(first) = by_key.insert(key, j) {
            dup_lines.push(format!("lines[{j}] duplicates lines[{first}]"));
        }
    }
    if !dup_lines.is_empty() {
        return Err(ParseError::Semantic {
            message: "duplicate lines".into(),
            offenders: dup_lines,
        });
    }

    let metadata = match obj.get("metadata") {
        None | Some(Value::Null) => BTreeMap::new(),
        Some(Value::Object(map)) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => Ok((k.clone(), s.clone())),
                _ => Err(schema(format!("metadata.{k}"), "expected a string")),
            })
            .collect::<std::result::Result<_, _>>()?,
        Some(_) => return Err(schema("metadata", "expected an object")),
    };

    Ok(IncidenceDocument {
        name,
        m,
        points,
        lines,
        metadata,
    })
}

impl IncidenceDocument {
    /// Points sorted by bitmask (or name), lines remapped, each line sorted and
    /// the line list sorted.
    pub fn canonicalize(&self) -> IncidenceDocument {
        let mut order: Vec<usize> = (0..self.points.len()).collect();
        order.sort_by(|&a, &b| self.points[a].cmp(&self.points[b]));
        let mut new_index = vec![0; self.points.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let mut lines: Vec<Vec<usize>> = self
            .lines
            .iter()
            .map(|l| {
                let mut l: Vec<usize> = l.iter().map(|&p| new_index[p]).collect();
                l.sort_unstable();
                l
            })
            .collect();
        lines.sort();
        IncidenceDocument {
            name: self.name.clone(),
            m: self.m,
            points: order.iter().map(|&i| self.points[i].clone()).collect(),
            lines,
            metadata: self.metadata.clone(),
        }
    }

    /// Generator count: the declared `m`, else the largest generator used.
    pub fn effective_m(&self) -> Option<u32> {
        self.m.or_else(|| {
            self.points
                .iter()
                .map(|p| p.subset_bits().map(|b| 64 - b.leading_zeros()))
                .collect::<Option<Vec<_>>>()
                .and_then(|v| v.into_iter().max())
        })
    }

    pub fn to_geometry(&self) -> Result<Geometry> {
        Geometry::new(
            self.name.clone(),
            self.effective_m(),
            self.points.clone(),
            self.lines.clone(),
        )
    }

    pub fn from_geometry(g: &Geometry) -> IncidenceDocument {
        IncidenceDocument {
            name: g.name().to_string(),
            m: g.m(),
            points: g.points().to_vec(),
            lines: g.lines().to_vec(),
            metadata: BTreeMap::new(),
        }
    }

    /// Resolves a point written as `1,4` (blade generators) or a name.
    pub fn resolve_point(&self, text: &str) -> Result<usize> {
        let text = text.trim();
        let label = if self.points.first().is_some_and(|p| p.subset_bits().is_some()) {
            let mut bits = 0u64;
            for part in text.split([',', ' ']).filter(|s| !s.is_empty()) {
                let j: u32 = part
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad generator {part:?} in {text:?}")))?;
                if j == 0 || j > MAX_GENERATORS {
                    return Err(Error::InvalidInput(format!("generator {j} out of range")));
                }
                bits |= 1u64 << (j - 1);
            }
            PointLabel::Subset(bits)
        } else {
            PointLabel::Name(text.to_string())
        };
        self.points
            .iter()
            .position(|p| *p == label)
            .ok_or_else(|| Error::InvalidInput(format!("no point {text:?} in {}", self.name)))
    }
}

fn json_str(s: &str) -> String {
    Value::String(s.to_string()).to_string()
}

/// Canonical, byte-stable JSON: canonical ordering, two-space indentation,
/// keys in schema order, one point or line per row. `m` and `metadata` are
/// omitted when absent or empty.
pub fn to_canonical_json(doc: &IncidenceDocument) -> String {
    let doc = doc.canonicalize();
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"name\": {},", json_str(&doc.name));
    if let Some(m) = doc.m {
        let _ = writeln!(out, "  \"m\": {m},");
    }
    let rows = |items: Vec<String>| -> String {
        if items.is_empty() {
            "[]".to_string()
        } else {
            format!("[\n    {}\n  ]", items.join(",\n    "))
        }
    };
    let points = doc
        .points
        .iter()
        .map(|p| match p {
            PointLabel::Subset(bits) => {
                let gens: Vec<String> = (0..64)
                    .filter(|i| bits >> i & 1 == 1)
                    .map(|i| (i + 1).to_string())
                    .collect();
                format!("[{}]", gens.join(", "))
            }
            PointLabel::Name(s) => json_str(s),
        })
        .collect();
    let lines = doc
        .lines
        .iter()
        .map(|l| {
            let idx: Vec<String> = l.iter().map(usize::to_string).collect();
            format!("[{}]", idx.join(", "))
        })
        .collect();
    let _ = write!(out, "  \"points\": {},\n  \"lines\": {}", rows(points), rows(lines));
    if !doc.metadata.is_empty() {
        let entries: Vec<String> = doc
            .metadata
            .iter()
            .map(|(k, v)| format!("{}: {}", json_str(k), json_str(v)))
            .collect();
        let _ = write!(out, ",\n  \"metadata\": {{\n    {}\n  }}", entries.join(",\n    "));
    }
    out.push_str("\n}\n");
    out
}

/// Metadata keys naming a perspective configuration in a document.
pub const META_CENTER: &str = "desargues.center";
pub const META_TRIANGLE: &str = "desargues.triangle";
pub const META_TRIANGLE_PRIME: &str = "desargues.triangle_prime";
