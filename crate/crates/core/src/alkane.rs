//! A small alkane-name grammar and the octane dataset.
//!
//! ```text
//! name        := "n-" parent | group ((" " | "-")? group)* " "? parent
//! group       := locants "-" multiplier? substituent
//! locants     := int ("," int)*
//! multiplier  := "di" | "tri" | "tetra"
//! substituent := "methyl" | "ethyl"
//! parent      := "butane" | "pentane" | "hexane" | "heptane" | "octane"
//! ```
//!
//! Matching is ASCII case-insensitive. Names are taken as written: no
//! lowest-locant canonicalisation, so different strings may describe the
//! same tree. The parent chain occupies vertices `0..len` (locant `k` is
//! vertex `k - 1`); substituent carbons follow in name order.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;
use crate::indices::neighbourhood_zagreb;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlkaneError {
    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax {
        position: usize,
        expected: &'static str,
    },
    #[error("locant {locant} is outside the {parent_len}-carbon parent chain")]
    LocantOutOfRange { locant: usize, parent_len: usize },
    #[error("carbon {locant} of the parent chain would have {degree} bonds")]
    ValenceExceeded { locant: usize, degree: usize },
    #[error("{locants} locant(s) given for multiplier {multiplier:?}")]
    MultiplierMismatch {
        multiplier: &'static str,
        locants: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Substituent {
    Methyl,
    Ethyl,
}

impl Substituent {
    pub fn carbons(self) -> usize {
        match self {
            Substituent::Methyl => 1,
            Substituent::Ethyl => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstituentGroup {
    pub locants: Vec<usize>,
    pub substituent: Substituent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlkaneName {
    pub groups: Vec<SubstituentGroup>,
    pub parent_len: usize,
    /// Written with the `n-` prefix.
    pub normal: bool,
}

const PARENTS: [(&str, usize); 5] = [
    ("butane", 4),
    ("pentane", 5),
    ("hexane", 6),
    ("heptane", 7),
    ("octane", 8),
];
const MULTIPLIERS: [(&str, usize); 3] = [("tetra", 4), ("tri", 3), ("di", 2)];
const SUBSTITUENTS: [(&str, Substituent); 2] = [
    ("methyl", Substituent::Methyl),
    ("ethyl", Substituent::Ethyl),
];

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_word(&mut self, word: &str) -> bool {
        let end = self.pos + word.len();
        if end <= self.text.len() && self.text[self.pos..end].eq_ignore_ascii_case(word.as_bytes())
        {
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &'static str) -> AlkaneError {
        AlkaneError::Syntax {
            position: self.pos,
            expected,
        }
    }

    fn int(&mut self) -> Result<usize, AlkaneError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("a locant"));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(AlkaneError::Syntax {
                position: start,
                expected: "a locant",
            })
    }

    fn group(&mut self) -> Result<SubstituentGroup, AlkaneError> {
        let mut locants = vec![self.int()?];
        while self.eat(b',') {
            locants.push(self.int()?);
        }
        if !self.eat(b'-') {
            return Err(self.error("'-' after the locants"));
        }
        let multiplier = MULTIPLIERS.iter().find(|(w, _)| self.eat_word(w)).copied();
        let substituent = SUBSTITUENTS
            .iter()
            .find(|(w, _)| self.eat_word(w))
            .map(|&(_, s)| s)
            .ok_or_else(|| self.error("methyl or ethyl"))?;
        let (word, wanted) = multiplier.unwrap_or(("", 1));
        if locants.len() != wanted {
            return Err(AlkaneError::MultiplierMismatch {
                multiplier: word,
                locants: locants.len(),
            });
        }
        Ok(SubstituentGroup {
            locants,
            substituent,
        })
    }

    fn parent(&mut self) -> Result<usize, AlkaneError> {
        PARENTS
            .iter()
            .find(|(w, _)| self.eat_word(w))
            .map(|&(_, len)| len)
            .ok_or_else(|| self.error("a parent chain butane..octane"))
    }
}

pub fn parse_alkane_name(text: &str) -> Result<AlkaneName, AlkaneError> {
    let mut c = Cursor {
        text: text.as_bytes(),
        pos: 0,
    };
    let mut groups = Vec::new();
    let mut normal = false;

    if c.eat_word("n-") {
        normal = true;
    } else if c.peek().is_some_and(|b| b.is_ascii_digit()) {
        groups.push(c.group()?);
        loop {
            let save = c.pos;
            let separated = c.eat(b'-') || c.eat(b' ');
            if c.peek().is_some_and(|b| b.is_ascii_digit()) {
                groups.push(c.group()?);
            } else {
                // a lone space may still precede the parent
                if separated && c.text[save] == b'-' {
                    return Err(c.error("another substituent group"));
                }
                break;
            }
        }
    }
    let parent_len = c.parent()?;
    if c.pos != c.text.len() {
        return Err(c.error("end of name"));
    }
    Ok(AlkaneName {
        groups,
        parent_len,
        normal,
    })
}

impl AlkaneName {
    /// Hydrogen-suppressed carbon tree.
    pub fn to_graph(&self) -> Result<Graph, AlkaneError> {
        let len = self.parent_len;
        let mut edges: Vec<(usize, usize)> = (1..len).map(|i| (i - 1, i)).collect();
        let mut degree: Vec<usize> = (0..len)
            .map(|i| usize::from(i > 0) + usize::from(i + 1 < len))
            .collect();
        let mut next = len;
        for group in &self.groups {
            for &locant in &group.locants {
                if locant == 0 || locant > len {
                    return Err(AlkaneError::LocantOutOfRange {
                        locant,
                        parent_len: len,
                    });
                }
                let anchor = locant - 1;
                degree[anchor] += 1;
                if degree[anchor] > 4 {
                    return Err(AlkaneError::ValenceExceeded {
                        locant,
                        degree: degree[anchor],
                    });
                }
                edges.push((anchor, next));
                for _ in 1..group.substituent.carbons() {
                    edges.push((next, next + 1));
                    next += 1;
                }
                next += 1;
            }
        }
        Ok(Graph::new(next, &edges).expect("substituent construction yields a simple tree"))
    }
}

pub fn parse_alkane(text: &str) -> Result<Graph, AlkaneError> {
    parse_alkane_name(text)?.to_graph()
}

/// One row of the octane property table.
#[derive(Debug, Clone, PartialEq)]
pub struct OctaneRecord {
    pub name: &'static str,
    pub acentric_factor: f64,
    /// Entropy, in the units of the source table.
    pub entropy: f64,
    /// Neighbourhood Zagreb value as tabulated.
    pub mn_reference: u64,
    pub structure: Graph,
}

/// Table rows as published: name, acentric factor, entropy, tabulated M_N.
const TABLE1: [(&str, f64, f64, u64); 17] = [
    ("2,2,3,3-tetramethyl butane", 0.255294, 93.06, 194),
    ("2,3,4-trimethyl pentane", 0.317422, 102.39, 144),
    ("2,3,3-trimethyl pentane", 0.293177, 102.06, 164),
    ("2,2,3-trimethyl pentane", 0.300816, 101.31, 162),
    ("3-methyl-3-ethyl pentane", 0.306899, 101.48, 152),
    ("2-methyl-3-ethyl pentane", 0.332433, 106.06, 132),
    ("3,4-dimethyl hexane", 0.340345, 106.59, 130),
    ("3,3-dimethyl hexane", 0.322596, 104.74, 146),
    ("2,5-dimethyl hexane", 0.35683, 105.72, 118),
    ("2,4-dimethyl hexane", 0.344223, 106.98, 124),
    ("2,3-dimethyl hexane", 0.348247, 108.02, 126),
    ("2,2-dimethyl hexane", 0.339426, 103.42, 138),
    ("3-ethyl hexane", 0.362472, 109.43, 114),
    ("4-methyl heptane", 0.371504, 109.32, 110),
    ("3-methyl heptane", 0.371002, 111.26, 108),
    ("2-methyl heptane", 0.377916, 109.84, 104),
    ("n-octane", 0.397898, 111.67, 90),
];

/// The constitutional octane isomer missing from the property table.
pub const MISSING_ISOMER: &str = "2,2,4-trimethyl pentane";

pub fn octane_table1() -> Vec<OctaneRecord> {
    TABLE1
        .iter()
        .map(
            |&(name, acentric_factor, entropy, mn_reference)| OctaneRecord {
                name,
                acentric_factor,
                entropy,
                mn_reference,
                structure: parse_alkane(name).expect("table names follow the grammar"),
            },
        )
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedIsomer {
    pub name: &'static str,
    pub structure: Graph,
    /// Not a row of the property table; carries no measured values.
    pub inferred: bool,
}

/// All 18 octane isomers: the table's 17 in table order, then the missing one.
pub fn octane_isomers_all() -> Vec<NamedIsomer> {
    TABLE1
        .iter()
        .map(|&(name, ..)| (name, false))
        .chain(std::iter::once((MISSING_ISOMER, true)))
        .map(|(name, inferred)| NamedIsomer {
            name,
            structure: parse_alkane(name).expect("isomer names follow the grammar"),
            inferred,
        })
        .collect()
}

/// `name,acentric,entropy,MN_table,MN_computed`; the inferred isomer has
/// empty property and reference columns.
pub fn dataset_csv() -> String {
    let mut out = String::from("name,acentric,entropy,MN_table,MN_computed\n");
    for r in octane_table1() {
        let _ = writeln!(
            out,
            "\"{}\",{},{},{},{}",
            r.name,
            r.acentric_factor,
            r.entropy,
            r.mn_reference,
            neighbourhood_zagreb(&r.structure)
        );
    }
    let missing = parse_alkane(MISSING_ISOMER).expect("grammatical");
    let _ = writeln!(
        out,
        "\"{MISSING_ISOMER}\",,,,{}",
        neighbourhood_zagreb(&missing)
    );
    out
}
