//! Sequences of `(index, exact value, p-adic valuation)` rows, exported as
//! CSV or JSON.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::padic::{val_rational, Prime, Valuation};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct TraceEntry {
    pub index: u64,
    pub value: Rational,
    pub valuation: Valuation,
}

/// A valuation trace. The labels name the CSV/JSON columns, e.g.
/// `N`/`partial_sum` for series and `m`/`difference` for Volkenborn sums.
#[derive(Debug, Clone, PartialEq)]
pub struct ValuationTrace {
    pub p: Prime,
    pub index_label: &'static str,
    pub value_label: &'static str,
    pub entries: Vec<TraceEntry>,
}

impl ValuationTrace {
    pub fn new(p: Prime, index_label: &'static str, value_label: &'static str) -> Self {
        ValuationTrace {
            p,
            index_label,
            value_label,
            entries: Vec::new(),
        }
    }

    /// Appends a row, computing the valuation of `value`.
    pub fn push(&mut self, index: u64, value: Rational) {
        let valuation = val_rational(&value, self.p);
        self.entries.push(TraceEntry {
            index,
            value,
            valuation,
        });
    }

    pub fn valuations(&self) -> Vec<Valuation> {
        self.entries.iter().map(|e| e.valuation).collect()
    }

    /// Running minimum from the right: `min_{M >= N} v(T_M)` for each row.
    pub fn tail_minima(&self) -> Vec<Valuation> {
        let mut out: Vec<Valuation> = self
            .entries
            .iter()
            .rev()
            .scan(Valuation::Infinite, |m, e| {
                *m = (*m).min(e.valuation);
                Some(*m)
            })
            .collect();
        out.reverse();
        out
    }

    /// CSV with a header row; values as `a/b`, infinite valuations as `inf`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Inconsistent(format!("csv: {e}"));
        w.write_record([self.index_label, self.value_label, "valuation"])
            .map_err(io)?;
        for e in &self.entries {
            w.write_record([
                e.index.to_string(),
                rational::to_json_string(&e.value),
                e.valuation.to_string(),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Inconsistent(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Inconsistent(format!("csv: {e}")))
    }
}

struct EntryView<'a>(&'a TraceEntry, &'static str, &'static str);

impl Serialize for EntryView<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TraceEntry", 3)?;
        st.serialize_field(self.1, &self.0.index)?;
        st.serialize_field(self.2, &rational::to_json_string(&self.0.value))?;
        st.serialize_field("valuation", &self.0.valuation)?;
        st.end()
    }
}

impl Serialize for ValuationTrace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<_> = self
            .entries
            .iter()
            .map(|e| EntryView(e, self.index_label, self.value_label))
            .collect();
        let mut st = s.serialize_struct("ValuationTrace", 2)?;
        st.serialize_field("p", &self.p.get())?;
        st.serialize_field("entries", &rows)?;
        st.end()
    }
}
