//! Every (sign pattern, admissible pair) couple of a degree, classified.

use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::criteria::{classify, Classification, Status, SCHEMA};
use crate::error::Result;
use crate::signpat::{admissible_pairs, all_patterns, SignPattern};
use crate::witness::{certify, construct_witness};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CatalogOptions {
    /// Only patterns with exactly two sign changes.
    pub c2_only: bool,
    /// Only three-block patterns, each with `(0, d - 2)`.
    pub blocks_only: bool,
    /// Attach a certified witness to every realizable row that has a construction.
    pub witnesses: bool,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub degree: usize,
    pub rows: Vec<Classification>,
}

/// Rows in canonical order: pattern string (`+` before `-`), then `(pos, neg)`.
pub fn build_catalog(d: usize, opts: CatalogOptions) -> Result<Catalog> {
    let mut patterns: Vec<SignPattern> = all_patterns(d)
        .into_iter()
        .filter(|s| !(opts.c2_only || opts.blocks_only) || s.changes_preservations().0 == 2)
        .collect();
    patterns.sort_by_key(|s| s.to_string());
    let couples: Vec<_> = patterns
        .iter()
        .flat_map(|s| {
            let mut aps = admissible_pairs(s);
            aps.sort_by_key(|ap| (ap.pos, ap.neg));
            if opts.blocks_only {
                aps.retain(|ap| ap.pos == 0 && ap.neg == d.saturating_sub(2));
            }
            aps.into_iter().map(move |ap| (s, ap))
        })
        .collect();
    let rows = couples
        .par_iter()
        .map(|(s, ap)| {
            let mut row = classify(s, *ap)?;
            if opts.witnesses && row.status == Status::Realizable {
                row.witness = construct_witness(s, *ap).ok().map(|w| w.poly);
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Catalog { degree: d, rows })
}

impl Catalog {
    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    /// Re-certify every attached witness against its row.
    pub fn verify_witnesses(&self) -> Result<usize> {
        let mut n = 0;
        for r in &self.rows {
            if let Some(w) = &r.witness {
                certify(w, &r.pattern, r.ap)?;
                n += 1;
            }
        }
        Ok(n)
    }

    /// Flat records: `pattern, pos, neg, status, reason, witness`.
    pub fn csv_records(&self) -> Vec<[String; 6]> {
        self.rows
            .iter()
            .map(|r| {
                [
                    r.pattern.to_string(),
                    r.ap.pos.to_string(),
                    r.ap.neg.to_string(),
                    format!("{:?}", r.status),
                    r.reason.to_string(),
                    r.witness.as_ref().map(|w| w.to_string()).unwrap_or_default(),
                ]
            })
            .collect()
    }
}

pub const CSV_HEADER: [&str; 6] = ["pattern", "pos", "neg", "status", "reason", "witness"];

impl Serialize for Catalog {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(4))?;
        map.serialize_entry("schema", SCHEMA)?;
        map.serialize_entry("degree", &self.degree)?;
        map.serialize_entry("count", &self.rows.len())?;
        map.serialize_entry("rows", &self.rows)?;
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signpat::AdmissiblePair;

    #[test]
    fn degree_four() {
        let c = build_catalog(4, CatalogOptions::default()).unwrap();
        let patterns: std::collections::BTreeSet<String> = c.rows.iter().map(|r| r.pattern.to_string()).collect();
        assert_eq!(patterns.len(), 16);
        let row = c
            .rows
            .iter()
            .find(|r| r.pattern.to_string() == "+---+" && r.ap == AdmissiblePair::new(0, 2))
            .unwrap();
        assert_eq!(row.status, Status::NonRealizable);
    }

    #[test]
    fn degree_two_resolved() {
        let c = build_catalog(2, CatalogOptions { witnesses: true, ..Default::default() }).unwrap();
        assert_eq!(c.count(Status::Unknown), 0);
        assert_eq!(c.verify_witnesses().unwrap(), c.rows.len());
    }

    #[test]
    fn blocks_only_degree_nine() {
        let c = build_catalog(9, CatalogOptions { blocks_only: true, ..Default::default() }).unwrap();
        assert_eq!(c.rows.len(), 36);
        let prop3: Vec<String> = c
            .rows
            .iter()
            .filter(|r| r.reason.to_string() == "Prop3-fact")
            .map(|r| r.pattern.three_block().unwrap().to_string())
            .collect();
        assert_eq!(prop3, ["S(4,4,2)", "S(3,4,3)", "S(2,4,4)"]);
        assert!(c.rows.iter().filter(|r| r.reason.to_string() == "Prop3-fact").all(|r| r.status == Status::NonRealizable));
    }

    #[test]
    fn deterministic() {
        let a = serde_json::to_string(&build_catalog(6, CatalogOptions::default()).unwrap()).unwrap();
        let b = serde_json::to_string(&build_catalog(6, CatalogOptions::default()).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
