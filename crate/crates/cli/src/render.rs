//! Text, JSON and CSV rendering of bound reports.

use num_bigint::BigInt;
use serde::Serialize;

use oscbound::bounds::BoundReport;
use oscbound::partitions::Partition;

use crate::problem::{compress, ProblemFile};

/// An integer written as a JSON number when it fits in `i64`, else as a string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ProvenanceJson {
    pub a_signed: &'static str,
    pub complex_count: &'static str,
    pub white_bound: Option<&'static str>,
    pub hhs_bound: Option<&'static str>,
    pub oracle_agreement: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct ResultJson {
    pub c: usize,
    pub mu: Vec<u32>,
    pub a_signed: Int,
    pub lower_bound: Int,
    pub complex_count: Int,
    pub white_bound: Option<Int>,
    pub hhs_bound: Option<Int>,
    pub provenance: ProvenanceJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poly: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub problem: ProblemFile,
    pub results: Vec<ResultJson>,
}

/// One computed problem: the echoed input, a report per `c`, and optional dumps.
pub struct Rendered {
    pub file: ProblemFile,
    pub reports: Vec<BoundReport>,
    pub polys: Vec<Option<String>>,
}

impl Rendered {
    pub fn json(&self) -> ReportJson {
        let results = self
            .reports
            .iter()
            .zip(&self.polys)
            .map(|(r, poly)| ResultJson {
                c: r.problem.c,
                mu: r.mu.parts().to_vec(),
                a_signed: Int(r.a_signed.clone()),
                lower_bound: Int(r.lower_bound.clone()),
                complex_count: Int(r.complex_count.clone()),
                white_bound: r.white_bound.clone().map(Int),
                hhs_bound: r.hhs_bound.clone().map(Int),
                provenance: ProvenanceJson {
                    a_signed: r.provenance.a_signed,
                    complex_count: r.provenance.complex_count,
                    white_bound: r.provenance.white_bound,
                    hhs_bound: r.provenance.hhs_bound,
                    oracle_agreement: r.provenance.oracle_agreement,
                },
                poly: poly.clone(),
            })
            .collect();
        ReportJson {
            problem: self.file.clone(),
            results,
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let Some(first) = self.reports.first() else {
            return out;
        };
        let p = &first.problem;
        out.push_str(&format!(
            "Gr({},{})  lambdas={}  nu=({})  mu=({})\n",
            p.n,
            p.d,
            lambda_list(&p.lambdas),
            p.nu,
            first.mu
        ));
        for (r, poly) in self.reports.iter().zip(&self.polys) {
            let opt = |v: &Option<BigInt>| v.as_ref().map_or("-".to_string(), BigInt::to_string);
            out.push_str(&format!(
                "c={}  a={}  bound={}  complex={}  white={}  hhs={}",
                r.problem.c,
                r.a_signed,
                r.lower_bound,
                r.complex_count,
                opt(&r.white_bound),
                opt(&r.hhs_bound)
            ));
            if let Some(agree) = r.provenance.oracle_agreement {
                out.push_str(if agree { "  oracles=agree" } else { "  oracles=DISAGREE" });
            }
            out.push('\n');
            if let Some(poly) = poly {
                out.push_str(&format!("  product(c={}) = {poly}\n", r.problem.c));
            }
        }
        out
    }
}

/// `1:x9` style, the inverse of the `--lambda` flag syntax.
pub fn lambda_list(lambdas: &[Partition]) -> String {
    compress(lambdas)
        .iter()
        .map(|e| {
            let parts = Partition::new(e.parts.clone())
                .map(|p| p.to_string())
                .unwrap_or_default();
            if e.repeat == 1 {
                parts
            } else {
                format!("{parts}:x{}", e.repeat)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// One row per problem, one column `c=<i>` per pair count holding the signed `a`.
pub fn csv(rendered: &[Rendered]) -> Result<String, csv::Error> {
    let max_c = rendered
        .iter()
        .flat_map(|r| r.reports.iter().map(|b| b.problem.c))
        .max()
        .unwrap_or(0);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["n".to_string(), "d".into(), "lambdas".into(), "nu".into()];
    header.extend((0..=max_c).map(|c| format!("c={c}")));
    w.write_record(&header)?;
    for r in rendered {
        let Some(first) = r.reports.first() else {
            continue;
        };
        let p = &first.problem;
        let mut row = vec![
            p.n.to_string(),
            p.d.to_string(),
            lambda_list(&p.lambdas),
            p.nu.to_string(),
        ];
        let mut cells = vec![String::new(); max_c + 1];
        for b in &r.reports {
            cells[b.problem.c] = b.a_signed.to_string();
        }
        row.extend(cells);
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_serializes_as_number_when_small() {
        assert_eq!(serde_json::to_string(&Int(BigInt::from(-42))).unwrap(), "-42");
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(
            serde_json::to_string(&Int(big)).unwrap(),
            "\"123456789012345678901234567890\""
        );
    }

    #[test]
    fn lambda_list_uses_flag_syntax() {
        let one = Partition::new(vec![1]).unwrap();
        let hook = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(lambda_list(&[one.clone(), one.clone(), one, hook]), "1:x3 2,1");
        assert_eq!(lambda_list(&[Partition::empty()]), "0");
    }
}
