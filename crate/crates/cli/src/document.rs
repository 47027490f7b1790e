//! The canonical JSON document format.
//!
//! A document is a single JSON object with fields in a fixed order, tables
//! stored row-major as arrays of element indices, and absent optional fields
//! omitted. [`StructureDocument::to_canonical`] emits compact JSON followed
//! by a newline, so a canonical document survives a parse and emit cycle
//! byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use ybe_core::finalg::{CarrierMap, CayleyTable, CompletelyRegular, FiniteGroup, FiniteSemigroup, Semilattice};
use ybe_core::semibrace::GeneralizedLeftSemiBrace;
use ybe_core::sslattice::{Payload, SemilatticeSystem};
use ybe_core::ybesol::SetSolution;

use crate::error::CliError;

pub const SCHEMA_VERSION: &str = "1";

type Table = Vec<Vec<usize>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Kind {
    Semigroup,
    Group,
    Semibrace,
    Solution,
    SemilatticeSystem,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Semigroup => "semigroup",
            Kind::Group => "group",
            Kind::Semibrace => "semibrace",
            Kind::Solution => "solution",
            Kind::SemilatticeSystem => "semilattice_system",
        }
    }
}

/// `φ_{from,to}` as a list of images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhiEntry {
    pub from: usize,
    pub to: usize,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDocument {
    pub schema_version: String,
    pub kind: Kind,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub add_table: Option<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul_table: Option<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lam_table: Option<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho_table: Option<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semilattice: Option<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub payloads: Option<Vec<StructureDocument>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<PhiEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offsets: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

fn malformed(msg: impl Into<String>) -> CliError {
    CliError::Malformed(msg.into())
}

/// Rejects tables that are not `n × n` with entries in `0..n`.
fn check_table(table: &Option<Table>, field: &str, n: usize) -> Result<Table, CliError> {
    let table = table
        .as_ref()
        .ok_or_else(|| malformed(format!("missing field `{field}`")))?;
    if table.len() != n || table.iter().any(|row| row.len() != n) {
        return Err(malformed(format!("`{field}` must be a {n} x {n} table")));
    }
    if let Some(v) = table.iter().flatten().find(|&&v| v >= n) {
        return Err(malformed(format!("`{field}` has entry {v} outside 0..{n}")));
    }
    Ok(table.clone())
}

fn forbid(present: bool, field: &str, kind: Kind) -> Result<(), CliError> {
    if present {
        Err(malformed(format!(
            "field `{field}` is not allowed in a {} document",
            kind.name()
        )))
    } else {
        Ok(())
    }
}

impl StructureDocument {
    fn empty(kind: Kind, order: usize) -> Self {
        StructureDocument {
            schema_version: SCHEMA_VERSION.into(),
            kind,
            order,
            add_table: None,
            mul_table: None,
            lam_table: None,
            rho_table: None,
            semilattice: None,
            payloads: None,
            phi: None,
            offsets: None,
            meta: None,
        }
    }

    pub fn semigroup(table: &CayleyTable) -> Self {
        StructureDocument {
            mul_table: Some(table.rows()),
            ..Self::empty(Kind::Semigroup, table.order())
        }
    }

    pub fn group(group: &FiniteGroup) -> Self {
        StructureDocument {
            kind: Kind::Group,
            ..Self::semigroup(group)
        }
    }

    pub fn semibrace(s: &GeneralizedLeftSemiBrace) -> Self {
        StructureDocument {
            add_table: Some(s.additive().rows()),
            mul_table: Some(s.multiplicative().rows()),
            ..Self::empty(Kind::Semibrace, s.order())
        }
    }

    pub fn solution(r: &SetSolution) -> Self {
        StructureDocument {
            lam_table: Some(r.lam_rows()),
            rho_table: Some(r.rho_rows()),
            ..Self::empty(Kind::Solution, r.order())
        }
    }

    pub fn system<P>(sys: &SemilatticeSystem<P>, payload: impl Fn(&P) -> StructureDocument) -> Self
    where
        P: Payload,
    {
        let phi = sys
            .maps()
            .iter()
            .filter(|((a, b), _)| a != b)
            .map(|(&(from, to), m)| PhiEntry {
                from,
                to,
                map: m.as_slice().to_vec(),
            })
            .collect();
        StructureDocument {
            semilattice: Some(sys.semilattice().rows()),
            payloads: Some(sys.payloads().iter().map(payload).collect()),
            phi: Some(phi),
            offsets: Some(sys.offsets().to_vec()),
            ..Self::empty(Kind::SemilatticeSystem, sys.total_order())
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.meta.get_or_insert_with(Meta::default).name = Some(name.into());
        self
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.meta.get_or_insert_with(Meta::default).provenance = Some(provenance.into());
        self
    }

    pub fn with_offsets(mut self, offsets: &[usize]) -> Self {
        self.offsets = Some(offsets.to_vec());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.meta.as_ref().and_then(|m| m.name.as_deref())
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: StructureDocument =
            serde_json::from_str(text).map_err(|e| malformed(format!("invalid document: {e}")))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_canonical(&self) -> String {
        let mut text = serde_json::to_string(self).expect("documents always serialize");
        text.push('\n');
        text
    }

    /// Shape checks: version, order, table dimensions and entry ranges, and
    /// the fields each kind may carry. Algebraic laws are not checked here.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(malformed(format!(
                "unsupported schema_version `{}`, expected `{SCHEMA_VERSION}`",
                self.schema_version
            )));
        }
        let n = self.order;
        if n == 0 {
            return Err(malformed("order must be positive"));
        }
        let kind = self.kind;
        match kind {
            Kind::Semigroup | Kind::Group => {
                check_table(&self.mul_table, "mul_table", n)?;
                forbid(self.add_table.is_some(), "add_table", kind)?;
                forbid(
                    self.lam_table.is_some() || self.rho_table.is_some(),
                    "lam_table/rho_table",
                    kind,
                )?;
            }
            Kind::Semibrace => {
                check_table(&self.add_table, "add_table", n)?;
                check_table(&self.mul_table, "mul_table", n)?;
                forbid(
                    self.lam_table.is_some() || self.rho_table.is_some(),
                    "lam_table/rho_table",
                    kind,
                )?;
            }
            Kind::Solution => {
                check_table(&self.lam_table, "lam_table", n)?;
                check_table(&self.rho_table, "rho_table", n)?;
                forbid(
                    self.add_table.is_some() || self.mul_table.is_some(),
                    "add_table/mul_table",
                    kind,
                )?;
            }
            Kind::SemilatticeSystem => return self.validate_system(),
        }
        forbid(self.semilattice.is_some(), "semilattice", kind)?;
        forbid(self.payloads.is_some(), "payloads", kind)?;
        forbid(self.phi.is_some(), "phi", kind)?;
        if let Some(offsets) = &self.offsets {
            if offsets.first() != Some(&0)
                || offsets.windows(2).any(|w| w[0] >= w[1])
                || offsets.iter().any(|&o| o >= n)
            {
                return Err(malformed(
                    "offsets must start at 0 and increase strictly inside the carrier",
                ));
            }
        }
        Ok(())
    }

    fn validate_system(&self) -> Result<(), CliError> {
        let kind = self.kind;
        forbid(
            self.add_table.is_some() || self.mul_table.is_some(),
            "add_table/mul_table",
            kind,
        )?;
        forbid(
            self.lam_table.is_some() || self.rho_table.is_some(),
            "lam_table/rho_table",
            kind,
        )?;
        let semilattice = self
            .semilattice
            .as_ref()
            .ok_or_else(|| malformed("missing field `semilattice`"))?;
        let m = semilattice.len();
        check_table(&self.semilattice, "semilattice", m.max(1))?;
        let payloads = self
            .payloads
            .as_ref()
            .ok_or_else(|| malformed("missing field `payloads`"))?;
        if payloads.len() != m {
            return Err(malformed(format!(
                "{} payloads for a semilattice of order {m}",
                payloads.len()
            )));
        }
        for p in payloads {
            if !matches!(p.kind, Kind::Solution | Kind::Semibrace) {
                return Err(malformed(format!(
                    "payloads must be solutions or semibraces, found {}",
                    p.kind.name()
                )));
            }
            p.validate()?;
        }
        let total: usize = payloads.iter().map(|p| p.order).sum();
        if self.order != total {
            return Err(malformed(format!(
                "order is {}, payload carriers add up to {total}",
                self.order
            )));
        }
        if let Some(offsets) = &self.offsets {
            let expected: Vec<usize> = payloads
                .iter()
                .scan(0, |acc, p| {
                    let here = *acc;
                    *acc += p.order;
                    Some(here)
                })
                .collect();
            if *offsets != expected {
                return Err(malformed(format!("offsets must be {expected:?}")));
            }
        }
        for entry in self.phi.iter().flatten() {
            if entry.from >= m || entry.to >= m {
                return Err(malformed(format!(
                    "phi entry ({}, {}) names a missing component",
                    entry.from, entry.to
                )));
            }
        }
        Ok(())
    }

    fn table<'a>(&self, field: &'a Option<Table>) -> &'a Table {
        field.as_ref().expect("validated document")
    }

    pub fn to_table(&self) -> Result<CayleyTable, CliError> {
        Ok(CayleyTable::from_rows(self.table(&self.mul_table))?)
    }

    pub fn to_semigroup(&self) -> Result<FiniteSemigroup, CliError> {
        Ok(FiniteSemigroup::from_rows(self.table(&self.mul_table))?)
    }

    pub fn to_completely_regular(&self) -> Result<CompletelyRegular, CliError> {
        Ok(CompletelyRegular::new(self.to_semigroup()?)?)
    }

    pub fn to_solution(&self) -> Result<SetSolution, CliError> {
        Ok(SetSolution::new(
            self.table(&self.lam_table),
            self.table(&self.rho_table),
        )?)
    }

    pub fn to_semibrace(&self) -> Result<GeneralizedLeftSemiBrace, CliError> {
        Ok(GeneralizedLeftSemiBrace::from_rows(
            self.table(&self.add_table),
            self.table(&self.mul_table),
        )?)
    }

    pub fn to_semilattice(&self) -> Result<Semilattice, CliError> {
        Ok(Semilattice::from_rows(self.table(&self.semilattice))?)
    }

    pub fn payload_documents(&self) -> &[StructureDocument] {
        self.payloads.as_deref().unwrap_or_default()
    }

    /// The structure maps keyed by `(from, to)`, built against the payload orders.
    pub fn phi_maps(&self) -> Result<BTreeMap<(usize, usize), CarrierMap>, CliError> {
        let payloads = self.payload_documents();
        let mut out = BTreeMap::new();
        for entry in self.phi.iter().flatten() {
            let map = CarrierMap::new(payloads[entry.from].order, payloads[entry.to].order, entry.map.clone())?;
            if out.insert((entry.from, entry.to), map).is_some() {
                return Err(CliError::Failed(format!(
                    "phi({},{}) is given twice",
                    entry.from, entry.to
                )));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let doc = StructureDocument::group(&g).with_name("C3");
        let text = doc.to_canonical();
        assert_eq!(
            text,
            "{\"schema_version\":\"1\",\"kind\":\"group\",\"order\":3,\"mul_table\":[[0,1,2],[1,2,0],[2,0,1]],\"meta\":{\"name\":\"C3\"}}\n"
        );
        assert_eq!(StructureDocument::parse(&text).unwrap().to_canonical(), text);
    }

    #[test]
    fn shape_errors() {
        let bad = [
            r#"{"schema_version":"1","kind":"group","order":2,"mul_table":[[0,1],[1,2]]}"#,
            r#"{"schema_version":"1","kind":"group","order":2,"mul_table":[[0,1]]}"#,
            r#"{"schema_version":"2","kind":"group","order":1,"mul_table":[[0]]}"#,
            r#"{"schema_version":"1","kind":"solution","order":1,"lam_table":[[0]]}"#,
            r#"{"schema_version":"1","kind":"group","order":1,"mul_table":[[0]],"extra":1}"#,
            r#"{"schema_version":"1","kind":"magma","order":1,"mul_table":[[0]]}"#,
            r#"{"schema_version":"1","kind":"group","order":0,"mul_table":[]}"#,
            "not json",
        ];
        for text in bad {
            assert!(
                matches!(StructureDocument::parse(text), Err(CliError::Malformed(_))),
                "{text}"
            );
        }
    }
}
