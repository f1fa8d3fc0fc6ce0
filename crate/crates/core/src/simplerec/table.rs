use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../../data/simple_groups.txt");

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleKind {
    Cyclic(u64),
    Alternating(u32),
    Lie { family: String, rank: u32, q: u64 },
    Sporadic(String),
}

impl fmt::Display for SimpleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleKind::Cyclic(p) => write!(f, "C{p}"),
            SimpleKind::Alternating(n) => write!(f, "A{n}"),
            SimpleKind::Lie { family, rank, q } => match family.as_str() {
                "A" => write!(f, "PSL({},{q})", rank + 1),
                "2A" => write!(f, "PSU({},{q})", 2 * rank + 1),
                "C" => write!(f, "PSp({},{q})", 2 * rank),
                "2B" => write!(f, "Sz({q})"),
                other => write!(f, "{other}{rank}({q})"),
            },
            SimpleKind::Sporadic(name) => f.write_str(name),
        }
    }
}

/// A recognized simple group with its λ value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleFactorId {
    pub kind: SimpleKind,
    pub order: u128,
    pub lambda: u32,
}

impl fmt::Display for SimpleFactorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.fmt(f)
    }
}

/// Chooses between the candidates of one order by the presence of an
/// element of a given order.
#[derive(Clone, Debug)]
pub struct Disambiguator {
    pub element_order: u64,
    pub when_present: SimpleKind,
}

#[derive(Clone, Debug, Default)]
pub struct RecognitionTable {
    pub entries: BTreeMap<u128, Vec<SimpleFactorId>>,
    pub disambiguators: BTreeMap<u128, Disambiguator>,
}

fn parse_num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    tok.and_then(|t| t.parse().ok()).ok_or_else(|| Error::Parse { line, message: format!("expected {what}") })
}

fn parse_kind(toks: &[&str], line: usize) -> Result<SimpleKind> {
    let err = |m: &str| Error::Parse { line, message: m.to_string() };
    match toks {
        ["cyclic", p] => Ok(SimpleKind::Cyclic(parse_num(Some(p), line, "prime")?)),
        ["alternating", n] => Ok(SimpleKind::Alternating(parse_num(Some(n), line, "degree")?)),
        ["lie", family, rank, q] => Ok(SimpleKind::Lie {
            family: family.to_string(),
            rank: parse_num(Some(rank), line, "rank")?,
            q: parse_num(Some(q), line, "field size")?,
        }),
        ["sporadic", name] => Ok(SimpleKind::Sporadic(name.to_string())),
        [] => Err(err("missing kind")),
        [kind, ..] => Err(err(&format!("malformed {kind} record"))),
    }
}

fn check_lambda(kind: &SimpleKind, lambda: u32, line: usize) -> Result<()> {
    let expected = match kind {
        SimpleKind::Cyclic(_) => Some(0),
        SimpleKind::Sporadic(_) => Some(1),
        // A5 = PSL(2,4), A6 = PSL(2,9), A8 = PSL(4,2)
        SimpleKind::Alternating(5 | 6) => Some(1),
        SimpleKind::Alternating(8) => Some(3),
        SimpleKind::Alternating(n) => Some(*n),
        SimpleKind::Lie { rank, .. } if lambda > *rank => {
            return Err(Error::Parse { line, message: format!("lambda {lambda} exceeds the Lie rank {rank}") })
        }
        _ => None,
    };
    match expected {
        Some(e) if e != lambda => Err(Error::Parse { line, message: format!("lambda must be {e} for {kind}") }),
        _ => Ok(()),
    }
}

impl RecognitionTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut table = RecognitionTable::default();
        let mut pending = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks[0] == "ambig" {
                let order: u128 = parse_num(toks.get(1).copied(), line, "order")?;
                let element_order: u64 = parse_num(toks.get(2).copied(), line, "element order")?;
                let kind = parse_kind(toks.get(3..).unwrap_or(&[]), line)?;
                pending.push((line, order));
                table.disambiguators.insert(order, Disambiguator { element_order, when_present: kind });
                continue;
            }
            if toks.len() < 3 {
                return Err(Error::Parse { line, message: "expected `order kind params lambda`".into() });
            }
            let order: u128 = parse_num(Some(toks[0]), line, "order")?;
            let lambda: u32 = parse_num(toks.last().copied(), line, "lambda")?;
            let kind = parse_kind(&toks[1..toks.len() - 1], line)?;
            check_lambda(&kind, lambda, line)?;
            table.entries.entry(order).or_default().push(SimpleFactorId { kind, order, lambda });
        }
        for (line, order) in pending {
            let d = &table.disambiguators[&order];
            let known = table.entries.get(&order).is_some_and(|c| c.iter().any(|e| e.kind == d.when_present));
            if !known {
                return Err(Error::Parse { line, message: format!("disambiguator names no entry of order {order}") });
            }
        }
        for (order, candidates) in &table.entries {
            if candidates.len() > 1 && !table.disambiguators.contains_key(order) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("order {order} is ambiguous without a disambiguator"),
                });
            }
        }
        Ok(table)
    }

    pub fn load(path: impl AsRef<std::path::Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// The table shipped with the crate.
    pub fn builtin() -> &'static RecognitionTable {
        static TABLE: OnceLock<RecognitionTable> = OnceLock::new();
        TABLE.get_or_init(|| RecognitionTable::parse(BUILTIN).expect("built-in table parses"))
    }

    pub fn len(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn candidates(&self, order: u128) -> &[SimpleFactorId] {
        self.entries.get(&order).map_or(&[], Vec::as_slice)
    }
}
