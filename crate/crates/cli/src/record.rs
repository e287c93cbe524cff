use cayht_core::numerics::{format_rational, to_decimal_string};
use cayht_core::{GraphFamily, Rational};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::args::Format;

/// Significant digits carried by `valueFloat`.
pub const FLOAT_DIGITS: u32 = 15;

pub const CSV_COLUMNS: [&str; 10] = [
    "family",
    "sizeParam",
    "p",
    "q",
    "start",
    "target",
    "method",
    "valueNum",
    "valueDen",
    "valueFloat",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OutputRecord {
    pub family: String,
    pub size_param: usize,
    pub p: String,
    pub q: String,
    pub start: Option<usize>,
    pub target: Option<usize>,
    pub method: String,
    pub value_num: String,
    pub value_den: String,
    pub value_float: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extra: Option<Map<String, Value>>,
}

impl OutputRecord {
    pub fn new(
        family: &GraphFamily,
        start: Option<usize>,
        target: Option<usize>,
        method: &str,
        value: &Rational,
    ) -> Self {
        let (p, q) = family.weights();
        OutputRecord {
            family: family.tag().to_string(),
            size_param: family.size_param(),
            p: format_rational(&p),
            q: format_rational(&q),
            start,
            target,
            method: method.to_string(),
            value_num: value.numer().to_string(),
            value_den: value.denom().to_string(),
            value_float: decimal(value).parse().unwrap_or(f64::NAN),
            extra: None,
        }
    }

    pub fn with_extra(mut self, extra: Map<String, Value>) -> Self {
        self.extra = Some(extra);
        self
    }

    fn row(&self) -> [String; 10] {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        let exact = Rational::new(
            self.value_num.parse().expect("numerator round-trips"),
            self.value_den.parse().expect("denominator round-trips"),
        );
        [
            self.family.clone(),
            self.size_param.to_string(),
            self.p.clone(),
            self.q.clone(),
            opt(self.start),
            opt(self.target),
            self.method.clone(),
            self.value_num.clone(),
            self.value_den.clone(),
            decimal(&exact),
        ]
    }
}

fn decimal(r: &Rational) -> String {
    to_decimal_string(r, FLOAT_DIGITS)
}

pub fn render(records: &[OutputRecord], format: Format) -> String {
    match format {
        Format::Json => to_json(records),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_COLUMNS).expect("in-memory write");
            for r in records {
                w.write_record(r.row()).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Table => {
            let rows: Vec<[String; 10]> = records.iter().map(OutputRecord::row).collect();
            let mut widths = CSV_COLUMNS.map(str::len);
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let line = |cells: Vec<&str>| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string() + "\n"
            };
            let mut out = line(CSV_COLUMNS.to_vec());
            for row in &rows {
                out += &line(row.iter().map(String::as_str).collect());
            }
            out
        }
    }
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}
