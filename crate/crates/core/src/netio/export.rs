//! CSV / JSON result writers. CSV floats use 4 decimals; JSON keeps full
//! precision. Row order is whatever the result reports, which is always
//! deterministic (node order, then time).

use std::fmt::Display;
use std::str::FromStr;

use serde::Serialize;

use super::NetError;
use crate::algebra::Semiring;
use crate::first_arrival::StepFun;
use crate::matrix::SquareMatrix;
use crate::traveling::TravelFun;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Csv,
    #[default]
    Json,
}

impl FromStr for Format {
    type Err = NetError;

    fn from_str(s: &str) -> Result<Format, NetError> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(NetError::UnsupportedFormat(s.to_string())),
        }
    }
}

/// Anything the CLI can write out.
pub trait Export {
    fn csv_header(&self) -> Vec<&'static str>;
    fn csv_rows(&self) -> Vec<Vec<String>>;
    fn json(&self) -> serde_json::Value;
}

pub fn export_results<R: Export + ?Sized>(result: &R, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(&result.json()).expect("JSON values serialize");
            out.push(b'\n');
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(result.csv_header()).expect("in-memory write");
            for row in result.csv_rows() {
                w.write_record(&row).expect("in-memory write");
            }
            w.into_inner().expect("in-memory flush")
        }
    }
}

/// `from,to,start,end,arrival,value`; identities get empty bounds.
impl<A: Semiring + Serialize + Display> Export for SquareMatrix<TravelFun<A>> {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["from", "to", "start", "end", "arrival", "value"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut rows = Vec::new();
        for (i, from) in self.labels().iter().enumerate() {
            for (j, to) in self.labels().iter().enumerate() {
                match self.get(i, j) {
                    TravelFun::Zero => {}
                    TravelFun::Identity(a) => {
                        rows.push(vec![from.clone(), to.clone(), String::new(), String::new(), "identity".into(), a.to_string()])
                    }
                    TravelFun::Steps(b) => rows.extend(b.triples().map(|(s, e, g)| {
                        vec![from.clone(), to.clone(), s.to_string(), e.to_string(), g.time.to_string(), g.value.to_string()]
                    })),
                }
            }
        }
        rows
    }

    fn json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// `from,to,start,end,arrival`.
impl Export for SquareMatrix<StepFun> {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["from", "to", "start", "end", "arrival"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut rows = Vec::new();
        for (i, from) in self.labels().iter().enumerate() {
            for (j, to) in self.labels().iter().enumerate() {
                match self.get(i, j) {
                    StepFun::Zero => {}
                    StepFun::Unit => rows.push(vec![from.clone(), to.clone(), String::new(), String::new(), "identity".into()]),
                    StepFun::Steps(b) => rows.extend(
                        b.triples().map(|(s, e, t)| vec![from.clone(), to.clone(), s.to_string(), e.to_string(), t.to_string()]),
                    ),
                }
            }
        }
        rows
    }

    fn json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

impl Export for StepFun {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["start", "end", "arrival"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        match self {
            StepFun::Zero => Vec::new(),
            StepFun::Unit => vec![vec![String::new(), String::new(), "identity".into()]],
            StepFun::Steps(b) => b.triples().map(|(s, e, t)| vec![s.to_string(), e.to_string(), t.to_string()]).collect(),
        }
    }

    fn json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}
