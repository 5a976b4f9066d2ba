//! Output rendering: JSON by default, RFC-4180 CSV on request.

use std::str::FromStr;

use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?} (expected json or csv)")),
        }
    }
}

/// Quotes a CSV field per RFC 4180: fields containing commas, quotes, or
/// line breaks are wrapped in double quotes with inner quotes doubled.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_row(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
}

/// Renders a JSON value in the selected format. CSV rendering expects either
/// an array of homogeneous objects (one row each, keys become the header), a
/// flat object (rendered as key/value rows), or an array of scalars.
pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{:#}", value),
        Format::Csv => render_csv(value),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_csv(value: &Value) -> String {
    let mut lines: Vec<String> = Vec::new();
    match value {
        Value::Array(rows) if rows.iter().all(Value::is_object) && !rows.is_empty() => {
            let header: Vec<String> = rows[0]
                .as_object()
                .unwrap()
                .keys()
                .cloned()
                .collect();
            lines.push(csv_row(&header));
            for row in rows {
                let obj = row.as_object().unwrap();
                let fields: Vec<String> = header
                    .iter()
                    .map(|k| obj.get(k).map(scalar).unwrap_or_default())
                    .collect();
                lines.push(csv_row(&fields));
            }
        }
        Value::Array(items) => {
            lines.push("value".into());
            for item in items {
                lines.push(csv_row(&[scalar(item)]));
            }
        }
        Value::Object(map) => {
            lines.push(csv_row(&["key".into(), "value".into()]));
            for (k, v) in map {
                lines.push(csv_row(&[k.clone(), scalar(v)]));
            }
        }
        other => lines.push(scalar(other)),
    }
    lines.join("\r\n") + "\r\n"
}
