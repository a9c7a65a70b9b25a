//! Coefficient tables of the modular equations `Σ hⁱ yᵢ(f) = 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::ModEqError;
use crate::numkernel::IntPoly;

pub const EMBEDDED_MODEQ_P163: &str = include_str!("../../../../data/modeq_p163.txt");

/// Which function plays the role of `h` against `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModEqId {
    Varphi,
    G(u8),
}

impl ModEqId {
    /// All seven equations, main one first.
    pub fn all() -> [ModEqId; 7] {
        [ModEqId::Varphi, ModEqId::G(1), ModEqId::G(2), ModEqId::G(3), ModEqId::G(4), ModEqId::G(5), ModEqId::G(6)]
    }
}

impl fmt::Display for ModEqId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModEqId::Varphi => write!(f, "f-varphi"),
            ModEqId::G(i) => write!(f, "f-g{i}"),
        }
    }
}

impl FromStr for ModEqId {
    type Err = ModEqError;
    fn from_str(s: &str) -> Result<Self, ModEqError> {
        match s {
            "f-varphi" => Ok(ModEqId::Varphi),
            _ => s
                .strip_prefix("f-g")
                .and_then(|d| d.parse::<u8>().ok())
                .filter(|d| (1..=6).contains(d))
                .map(ModEqId::G)
                .ok_or_else(|| ModEqError::UnknownId(s.to_string())),
        }
    }
}

/// `Σ_{i<7} hⁱ yᵢ(f) + lead · h⁷ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModEqTable {
    pub id: ModEqId,
    pub lead_sign: i8,
    /// `y₀ .. y₆`.
    pub rows: Vec<IntPoly>,
}

impl ModEqTable {
    /// Degree in `h`.
    pub fn degree_h(&self) -> usize {
        self.rows.len()
    }

    pub fn max_degree_f(&self) -> usize {
        self.rows.iter().filter_map(IntPoly::degree).max().unwrap_or(0)
    }

    /// Row-wise degree bounds, `None` for zero rows.
    pub fn row_degrees(&self) -> Vec<Option<usize>> {
        self.rows.iter().map(IntPoly::degree).collect()
    }

    fn write(&self, out: &mut String) {
        let sign = if self.lead_sign > 0 { "+1" } else { "-1" };
        out.push_str(&format!("modeq {} lead {sign}\n", self.id));
        for (i, r) in self.rows.iter().enumerate() {
            let cs: Vec<String> =
                if r.is_zero() { vec!["0".into()] } else { r.coeffs().iter().map(|c| c.to_string()).collect() };
            out.push_str(&format!("y{i}: {}\n", cs.join(" ")));
        }
    }
}

/// Parses the line-oriented table file.
pub fn parse_modeq_file(text: &str) -> Result<Vec<ModEqTable>, ModEqError> {
    let bad = |line: usize, msg: &str| ModEqError::Parse { line, msg: msg.to_string() };
    let mut out: Vec<ModEqTable> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        if let Some(rest) = l.strip_prefix("modeq ") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 || parts[1] != "lead" {
                return Err(bad(ln, "expected `modeq <id> lead <+1|-1>`"));
            }
            let lead_sign = match parts[2] {
                "+1" | "1" => 1,
                "-1" => -1,
                _ => return Err(bad(ln, "lead must be +1 or -1")),
            };
            out.push(ModEqTable { id: parts[0].parse()?, lead_sign, rows: Vec::new() });
            continue;
        }
        let (tag, body) = l.split_once(':').ok_or_else(|| bad(ln, "expected `y<i>: ...`"))?;
        let idx: usize = tag.strip_prefix('y').and_then(|d| d.parse().ok()).ok_or_else(|| bad(ln, "bad row tag"))?;
        let cur = out.last_mut().ok_or_else(|| bad(ln, "row before header"))?;
        if idx != cur.rows.len() {
            return Err(bad(ln, "rows must appear as y0..y6 in order"));
        }
        let coeffs: Vec<BigInt> = body
            .split_whitespace()
            .map(|t| t.parse::<BigInt>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad(ln, "non-integer coefficient"))?;
        cur.rows.push(IntPoly::new(coeffs));
    }
    for t in &out {
        if t.rows.len() != 7 {
            return Err(ModEqError::Parse { line: 0, msg: format!("{} has {} rows, expected 7", t.id, t.rows.len()) });
        }
    }
    Ok(out)
}

pub fn write_modeq_file(tables: &[ModEqTable]) -> String {
    let mut s = String::new();
    for t in tables {
        t.write(&mut s);
    }
    s
}

/// The shipped tables.
pub fn embedded_tables() -> Vec<ModEqTable> {
    parse_modeq_file(EMBEDDED_MODEQ_P163).expect("embedded modular-equation data is valid")
}

pub fn embedded_table(id: ModEqId) -> ModEqTable {
    embedded_tables().into_iter().find(|t| t.id == id).expect("all seven tables embedded")
}
