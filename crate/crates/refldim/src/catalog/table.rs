//! The exceptional degree table, embedded as a data file and
//! invariant-checked at first use.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigUint;
use once_cell::race::OnceBox;

use super::{CatalogError, DegreeVector};

/// One exceptional group record: Shephard-Todd index, rank, order, degrees
/// and a display name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalEntry {
    pub index: u8,
    pub rank: u8,
    pub order: u64,
    pub degrees: DegreeVector,
    pub name: String,
}

/// The parsed table for ST4..ST37, with its provenance metadata.
#[derive(Debug, Clone)]
pub struct ExceptionalTable {
    version: String,
    source: String,
    entries: Vec<ExceptionalEntry>,
}

impl ExceptionalTable {
    /// Entry by Shephard-Todd index; panics outside 4..=37 (constructors
    /// screen indices before lookups happen).
    pub fn entry(&self, index: u8) -> &ExceptionalEntry {
        &self.entries[index as usize - 4]
    }

    pub fn entries(&self) -> &[ExceptionalEntry] {
        &self.entries
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    /// Where the degree data was transcribed from. The two Weyl entries
    /// ST35 and ST37 are corroborated independently; the rest of the table
    /// is external reference data, and reports flag it as such.
    pub fn source(&self) -> &str {
        &self.source
    }
}

const EMBEDDED_TABLE: &str = include_str!("../../data/exceptional.txt");

/// Parse and invariant-check a table in the one-record-per-line format:
/// `st_index rank order degrees-comma-separated name`.
///
/// Checks per record: index in 4..=37 appearing exactly once, rank = number
/// of degrees <= 8, and product of degrees = order.
pub fn parse_exceptional_table(text: &str) -> Result<ExceptionalTable, CatalogError> {
    let mut version = String::new();
    let mut source = String::new();
    let mut entries: Vec<Option<ExceptionalEntry>> = alloc::vec![None; 34];
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(v) = rest.strip_prefix("version:") {
                version = v.trim().to_string();
            } else if let Some(s) = rest.strip_prefix("source:") {
                source = s.trim().to_string();
            } else if !source.is_empty() && !rest.is_empty() && !rest.contains(':') && entries.iter().all(Option::is_none) {
                // continuation line of the source comment block
                source.push(' ');
                source.push_str(rest);
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let err = |reason: &str| CatalogError::TableFormat {
            line: lineno,
            reason: reason.to_string(),
        };
        let mut fields = line.splitn(5, char::is_whitespace);
        let index: u8 = fields
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| err("missing or malformed st_index"))?;
        let rank: u8 = fields
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| err("missing or malformed rank"))?;
        let order: u64 = fields
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| err("missing or malformed order"))?;
        let degrees_field = fields.next().ok_or_else(|| err("missing degrees"))?;
        let name = fields.next().unwrap_or("").trim().to_string();
        let mut degrees: Vec<u64> = Vec::new();
        for part in degrees_field.split(',') {
            degrees.push(part.parse().map_err(|_| err("malformed degree"))?);
        }
        if !(4..=37).contains(&index) {
            return Err(err("st_index outside 4..=37"));
        }
        if rank as usize != degrees.len() || rank > 8 {
            return Err(err("rank must equal the number of degrees and be at most 8"));
        }
        let degrees = DegreeVector::new(degrees);
        if degrees.product() != BigUint::from(order) {
            return Err(err("product of degrees does not equal the order"));
        }
        let slot = &mut entries[index as usize - 4];
        if slot.is_some() {
            return Err(err("duplicate st_index"));
        }
        *slot = Some(ExceptionalEntry {
            index,
            rank,
            order,
            degrees,
            name,
        });
    }
    let mut complete = Vec::with_capacity(34);
    for (offset, slot) in entries.into_iter().enumerate() {
        match slot {
            Some(entry) => complete.push(entry),
            None => {
                return Err(CatalogError::TableFormat {
                    line: 0,
                    reason: alloc::format!("missing entry for ST{}", offset + 4),
                })
            }
        }
    }
    Ok(ExceptionalTable {
        version,
        source,
        entries: complete,
    })
}

static TABLE: OnceBox<ExceptionalTable> = OnceBox::new();

/// The embedded exceptional degree table, parsed and checked once.
pub fn exceptional_table() -> &'static ExceptionalTable {
    TABLE.get_or_init(|| {
        alloc::boxed::Box::new(
            parse_exceptional_table(EMBEDDED_TABLE).expect("embedded exceptional table is valid"),
        )
    })
}
