use super::FormatError;
use crate::evidence::SourceId;
use crate::stream::SensorSeries;

/// Parses `time,s1,s2,...` CSV. Column order defines sensor order; sensor
/// labels may be `s<id>` or `x<id>` and must be exactly `1..=n`.
pub fn parse_series(text: &str) -> Result<SensorSeries, FormatError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());

    let mut records = reader.records();
    let syntax = |line: usize, column: usize, message: String| FormatError::Syntax { line, column, message };

    let header = match records.next() {
        Some(r) => r.map_err(|e| syntax(csv_line(&e), 1, e.to_string()))?,
        None => return Err(syntax(1, 1, "missing header row".into())),
    };
    let header_line = header.position().map_or(1, |p| p.line() as usize);
    if !header.get(0).is_some_and(|h| h.eq_ignore_ascii_case("time")) {
        return Err(syntax(header_line, 1, "first column must be `time`".into()));
    }
    let ids = header
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, label)| {
            label
                .strip_prefix(['s', 'S', 'x', 'X'])
                .and_then(|d| d.parse::<u32>().ok())
                .filter(|&v| v > 0)
                .map(SourceId)
                .ok_or_else(|| syntax(header_line, k + 1, format!("bad sensor label {label:?}; expected s<id>")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if ids.is_empty() {
        return Err(syntax(header_line, 2, "no sensor columns".into()));
    }
    let mut seen = vec![false; ids.len()];
    for (k, id) in ids.iter().enumerate() {
        match seen.get_mut(id.index()) {
            Some(s) if !*s => *s = true,
            _ => {
                return Err(syntax(
                    header_line,
                    k + 2,
                    format!("sensor ids must be s1..s{} without repeats", ids.len()),
                ))
            }
        }
    }

    let width = ids.len() + 1;
    let mut times: Vec<f64> = Vec::new();
    let mut columns: Vec<Vec<f64>> = vec![Vec::new(); ids.len()];
    for record in records {
        let record = record.map_err(|e| syntax(csv_line(&e), 1, e.to_string()))?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.len() == 1 && record.get(0) == Some("") {
            continue;
        }
        if record.len() != width {
            return Err(FormatError::RaggedRow { line, expected: width, got: record.len() });
        }
        let mut values = record.iter().enumerate().map(|(k, field)| {
            let v: f64 =
                field.parse().map_err(|_| syntax(line, k + 1, format!("cannot parse {field:?} as a number")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(FormatError::NonFiniteValue { line, column: k + 1 })
            }
        });
        let t = values.next().expect("width >= 2")?;
        if times.last().is_some_and(|&prev| t <= prev) {
            return Err(FormatError::NonIncreasingTime { line });
        }
        times.push(t);
        for (column, v) in columns.iter_mut().zip(values) {
            column.push(v?);
        }
    }
    Ok(SensorSeries::new(times, ids, columns)?)
}

fn csv_line(e: &csv::Error) -> usize {
    e.position().map_or(0, |p| p.line() as usize)
}

/// CSV with a `time,s<id>,...` header; values use the shortest
/// representation that parses back to the same float.
pub fn emit_series(series: &SensorSeries) -> String {
    let mut out = String::from("time");
    for id in series.source_ids() {
        out.push_str(&format!(",s{}", id.0));
    }
    out.push('\n');
    let columns: Vec<&[f64]> = series.source_ids().iter().map(|&id| series.readings(id).expect("own id")).collect();
    for (k, t) in series.timestamps().iter().enumerate() {
        out.push_str(&t.to_string());
        for col in &columns {
            out.push(',');
            out.push_str(&col[k].to_string());
        }
        out.push('\n');
    }
    out
}
