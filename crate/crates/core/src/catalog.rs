//! Bounded enumeration of canonical signatures and classified catalogs.

use std::collections::BTreeSet;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    classify, theorem_check_classification, Classification, ClassificationRecord,
};
use crate::signature::{BoundaryCircle, Signature};

/// Bounds for [`enumerate_signatures`]. Every bound is inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub struct CatalogBounds {
    pub max_genus: u32,
    pub max_cones: usize,
    /// Largest cone order.
    pub max_order: u32,
    pub max_boundary: usize,
    pub max_corners_per_circle: usize,
    /// Largest corner order.
    pub max_corner_order: u32,
    pub max_punctures: u32,
    pub orientable_only: bool,
}

/// Nondecreasing sequences of length `0..=max_len` over `items`.
fn multisets<T: Clone>(items: &[T], max_len: usize) -> Vec<Vec<T>> {
    fn go<T: Clone>(
        items: &[T],
        from: usize,
        left: usize,
        cur: &mut Vec<T>,
        out: &mut Vec<Vec<T>>,
    ) {
        out.push(cur.clone());
        if left == 0 {
            return;
        }
        for i in from..items.len() {
            cur.push(items[i].clone());
            go(items, i, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, max_len, &mut Vec::new(), &mut out);
    out
}

fn corner_sequences(max_len: usize, max_order: u32) -> BTreeSet<Vec<u32>> {
    let orders: Vec<u32> = (2..=max_order).collect();
    let mut out = BTreeSet::new();
    let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..=max_len {
        for seq in &layer {
            if let BoundaryCircle::Mirror { corners } = BoundaryCircle::mirror(seq.clone()) {
                out.insert(corners);
            }
        }
        layer = layer
            .iter()
            .flat_map(|s| orders.iter().map(move |&o| [s.as_slice(), &[o]].concat()))
            .collect();
    }
    out
}

/// All boundary circle kinds allowed by the bounds, canonical and distinct.
pub fn circle_kinds(bounds: &CatalogBounds) -> Vec<BoundaryCircle> {
    let mut kinds = vec![BoundaryCircle::Manifold];
    kinds.extend(
        corner_sequences(bounds.max_corners_per_circle, bounds.max_corner_order)
            .into_iter()
            .map(|corners| BoundaryCircle::Mirror { corners }),
    );
    kinds
}

/// Calls `f` once per distinct canonical signature within the bounds, in
/// an unspecified but deterministic order.
pub fn for_each_signature(bounds: &CatalogBounds, mut f: impl FnMut(Signature)) {
    let cone_orders: Vec<u32> = (2..=bounds.max_order).collect();
    let cone_sets = multisets(&cone_orders, bounds.max_cones);
    let boundary_sets = multisets(&circle_kinds(bounds), bounds.max_boundary);
    let surfaces = (0..=bounds.max_genus).map(|g| (true, g)).chain(
        (1..=bounds.max_genus)
            .filter(|_| !bounds.orientable_only)
            .map(|g| (false, g)),
    );
    for (orientable, genus) in surfaces {
        for punctures in 0..=bounds.max_punctures {
            for boundary in &boundary_sets {
                for cones in &cone_sets {
                    let sig = Signature::new(
                        orientable,
                        genus,
                        punctures,
                        boundary.clone(),
                        cones.clone(),
                    )
                    .expect("enumerated data is valid");
                    f(sig);
                }
            }
        }
    }
}

/// Distinct canonical signatures within the bounds, sorted by canonical text.
pub fn enumerate_signatures(bounds: &CatalogBounds) -> Vec<Signature> {
    let mut all = Vec::new();
    for_each_signature(bounds, |s| all.push(s));
    let mut keyed: Vec<(String, Signature)> = all.into_iter().map(|s| (s.to_string(), s)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, s)| s).collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CatalogSummary {
    pub total: usize,
    pub good: usize,
    pub bad: usize,
    pub finite: usize,
    pub infinite: usize,
}

impl CatalogSummary {
    fn add(&mut self, c: &Classification) {
        self.total += 1;
        if c.good {
            self.good += 1;
        } else {
            self.bad += 1;
        }
        if c.group_finite {
            self.finite += 1;
        } else {
            self.infinite += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub entries: Vec<Classification>,
    pub summary: CatalogSummary,
    /// Signatures failing a theorem-check clause, with the clause messages.
    pub violations: Vec<(String, Vec<String>)>,
}

impl Catalog {
    pub fn records(&self) -> impl Iterator<Item = ClassificationRecord> + '_ {
        self.entries.iter().map(Classification::record)
    }

    /// One JSON object per line.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> io::Result<()> {
        for rec in self.records() {
            serde_json::to_writer(&mut w, &rec)?;
            w.write_all(b"\n")?;
        }
        Ok(())
    }
}

/// Classifies every enumerated signature (in parallel) and runs the theorem
/// check on each; output order is canonical regardless of scheduling.
pub fn build_catalog(bounds: &CatalogBounds) -> Catalog {
    let sigs = enumerate_signatures(bounds);
    let entries: Vec<Classification> = sigs.par_iter().map(classify).collect();
    let mut summary = CatalogSummary::default();
    let mut violations = Vec::new();
    for c in &entries {
        summary.add(c);
        let report = theorem_check_classification(c);
        if !report.passed() {
            let msgs = report
                .violations()
                .map(|(cl, m)| format!("{cl:?}: {m}"))
                .collect();
            violations.push((report.signature.clone(), msgs));
        }
    }
    Catalog {
        entries,
        summary,
        violations,
    }
}
