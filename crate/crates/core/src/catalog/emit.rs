use std::io::{self, Write};
use std::str::FromStr;

use super::scan::ScanRecord;
use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 11] = [
    "v", "k", "lambda", "mu", "type", "cab", "delsarte", "gap", "thm21", "thm22", "thm51",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn table(records: &[ScanRecord], color: bool, out: &mut dyn Write) -> io::Result<()> {
    let header = [
        "v", "k", "lambda", "mu", "type", "cab", "delsarte", "gap", "thm21", "thm22", "thm51", "exists", "sharp",
    ];
    let rows: Vec<[String; 13]> = records
        .iter()
        .map(|r| {
            let p = &r.params;
            let ann = r.annotation.as_ref();
            [
                p.v.to_string(),
                p.k.to_string(),
                p.lambda.to_string(),
                p.mu.to_string(),
                r.type_tag.label().to_string(),
                r.cab.to_string(),
                r.delsarte.to_string(),
                r.gap.to_string(),
                yes_no(r.thm21).to_string(),
                yes_no(r.thm22).to_string(),
                yes_no(r.thm51).to_string(),
                ann.map_or("", |a| a.exists.symbol()).to_string(),
                ann.and_then(|a| a.sharp).map_or("", |s| s.symbol()).to_string(),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<String>| -> String {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(header.iter().map(|s| s.to_string()).collect()))?;
    for (row, r) in rows.iter().zip(records) {
        let text = line(row.to_vec());
        if color && r.gap > 0 {
            writeln!(out, "\x1b[1;32m{text}\x1b[0m")?;
        } else {
            writeln!(out, "{text}")?;
        }
    }
    Ok(())
}

fn csv_out(records: &[ScanRecord], out: &mut dyn Write) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        let p = &r.params;
        w.write_record([
            p.v.to_string(),
            p.k.to_string(),
            p.lambda.to_string(),
            p.mu.to_string(),
            r.type_tag.label().to_string(),
            r.cab.to_string(),
            r.delsarte.to_string(),
            r.gap.to_string(),
            r.thm21.to_string(),
            r.thm22.to_string(),
            r.thm51.to_string(),
        ])?;
    }
    w.flush()
}

/// Writes records in the chosen format. Output depends only on the inputs.
pub fn emit(records: &[ScanRecord], format: OutputFormat, color: bool, out: &mut dyn Write) -> io::Result<()> {
    match format {
        OutputFormat::Table => table(records, color, out),
        OutputFormat::Csv => csv_out(records, out),
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, records)?;
            writeln!(out)
        }
    }
}

pub fn emit_to_string(records: &[ScanRecord], format: OutputFormat) -> String {
    let mut buf = Vec::new();
    emit(records, format, false, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("emitters write UTF-8")
}

pub fn parse_json(text: &str) -> Result<Vec<ScanRecord>> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{scan_compare, ScanConfig};

    #[test]
    fn empty_csv_is_header_only() {
        assert_eq!(
            emit_to_string(&[], OutputFormat::Csv),
            "v,k,lambda,mu,type,cab,delsarte,gap,thm21,thm22,thm51\n"
        );
    }

    #[test]
    fn json_round_trip() {
        let recs = scan_compare(&ScanConfig::new(40)).unwrap().records;
        let text = emit_to_string(&recs, OutputFormat::Json);
        assert_eq!(parse_json(&text).unwrap(), recs);
    }

    #[test]
    fn colour_only_when_asked() {
        let recs = scan_compare(&ScanConfig::new(17)).unwrap().records;
        let mut plain = Vec::new();
        emit(&recs, OutputFormat::Table, false, &mut plain).unwrap();
        let mut coloured = Vec::new();
        emit(&recs, OutputFormat::Table, true, &mut coloured).unwrap();
        assert!(!String::from_utf8(plain).unwrap().contains('\x1b'));
        assert!(String::from_utf8(coloured).unwrap().contains('\x1b'));
    }

    #[test]
    fn format_names() {
        assert_eq!("CSV".parse::<OutputFormat>().unwrap(), OutputFormat::Csv);
        assert!("xml".parse::<OutputFormat>().is_err());
    }
}
