//! Instance files in two shapes.
//!
//! Text form: the first significant line is the job count, then one
//! "a b" line per job. Blank lines and `#` comments are skipped; a
//! leading `# name: ...` comment carries the instance label, so text and
//! JSON round-trip the same data. JSON form: an object with an optional
//! `name` and `jobs`, a list of `[a, b]` pairs. Both assign ids 1..=n in
//! file order.

use std::fmt;
use std::fmt::Write;

use flowshop::Instance;
use serde::{Deserialize, Serialize};

/// Why the bytes did not become an instance; text errors carry the
/// 1-based line number of the first offending line.
#[derive(Debug)]
pub enum ParseError {
    Text { line: usize, message: String },
    Json(serde_json::Error),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Text { line, message } => write!(f, "line {line}: {message}"),
            ParseError::Json(e) => write!(f, "json: {e}"),
        }
    }
}

fn text_error(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Text {
        line,
        message: message.into(),
    }
}

pub fn parse_text(src: &str) -> Result<Instance, ParseError> {
    let mut name: Option<String> = None;
    let mut count: Option<usize> = None;
    let mut times: Vec<(u32, u32)> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in src.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if name.is_none() {
                if let Some(label) = rest.trim().strip_prefix("name:") {
                    name = Some(label.trim().to_string());
                }
            }
            continue;
        }
        let Some(expected) = count else {
            let n = line
                .parse::<usize>()
                .map_err(|_| text_error(lineno, format!("expected the job count, got {line:?}")))?;
            count = Some(n);
            times.reserve(n);
            continue;
        };
        if times.len() == expected {
            return Err(text_error(
                lineno,
                format!("more than the declared {expected} job lines"),
            ));
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(text_error(lineno, format!("expected \"a b\", got {line:?}")));
        }
        let a = fields[0]
            .parse::<u32>()
            .map_err(|_| text_error(lineno, format!("bad integer {:?}", fields[0])))?;
        let b = fields[1]
            .parse::<u32>()
            .map_err(|_| text_error(lineno, format!("bad integer {:?}", fields[1])))?;
        times.push((a, b));
    }
    let Some(expected) = count else {
        return Err(text_error(last_line.max(1), "missing the job count line"));
    };
    if times.len() != expected {
        return Err(text_error(
            last_line.max(1),
            format!("declared {expected} jobs, found {}", times.len()),
        ));
    }
    let mut instance = Instance::from_times(&times);
    instance.name = name;
    Ok(instance)
}

pub fn emit_text(instance: &Instance) -> String {
    let mut out = String::new();
    if let Some(name) = &instance.name {
        writeln!(out, "# name: {name}").expect("write to string");
    }
    writeln!(out, "{}", instance.n()).expect("write to string");
    for job in &instance.jobs {
        writeln!(out, "{} {}", job.a, job.b).expect("write to string");
    }
    out
}

#[derive(Serialize, Deserialize)]
struct JsonInstance {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    jobs: Vec<(u32, u32)>,
}

pub fn parse_json(src: &str) -> Result<Instance, ParseError> {
    let file: JsonInstance = serde_json::from_str(src).map_err(ParseError::Json)?;
    let mut instance = Instance::from_times(&file.jobs);
    instance.name = file.name;
    Ok(instance)
}

pub fn emit_json(instance: &Instance) -> String {
    let file = JsonInstance {
        name: instance.name.clone(),
        jobs: instance.jobs.iter().map(|j| (j.a, j.b)).collect(),
    };
    serde_json::to_string_pretty(&file).expect("front matter serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trips() {
        let mut instance = Instance::from_times(&[(1, 4), (2, 3), (3, 5)]);
        instance.name = Some("trio".to_string());
        let emitted = emit_text(&instance);
        assert_eq!(parse_text(&emitted).unwrap(), instance);

        instance.name = None;
        let emitted = emit_text(&instance);
        assert_eq!(emitted, "3\n1 4\n2 3\n3 5\n");
        assert_eq!(parse_text(&emitted).unwrap(), instance);
    }

    #[test]
    fn json_round_trips() {
        let mut instance = Instance::from_times(&[(2, 2), (1, 9)]);
        assert_eq!(parse_json(&emit_json(&instance)).unwrap(), instance);
        instance.name = Some("pair".to_string());
        assert_eq!(parse_json(&emit_json(&instance)).unwrap(), instance);
    }

    #[test]
    fn text_tolerates_comments_and_blanks() {
        let src = "# a file\n\n2\n# interlude\n1 2\n\n3 4\n";
        let instance = parse_text(src).unwrap();
        assert_eq!(instance.n(), 2);
        assert_eq!(instance.name, None);
    }

    #[test]
    fn text_errors_carry_line_numbers() {
        let err = parse_text("2\n1 2\n2 x\n").unwrap_err().to_string();
        assert!(err.contains("line 3"), "got {err:?}");
        let err = parse_text("nope\n").unwrap_err().to_string();
        assert!(err.contains("line 1"), "got {err:?}");
        let err = parse_text("2\n1 2\n").unwrap_err().to_string();
        assert!(err.contains("declared 2"), "got {err:?}");
        let err = parse_text("1\n1 2\n9 9\n").unwrap_err().to_string();
        assert!(err.contains("line 3"), "got {err:?}");
        let err = parse_text("1\n1 2 3\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "got {err:?}");
    }

    #[test]
    fn json_rejects_malformed_input() {
        assert!(parse_json("{\"jobs\": [[1, 2], [3]]}").is_err());
        assert!(parse_json("not json").is_err());
    }
}
