//! Output encodings. CSV is a lossless flattening of the JSON report into
//! `path,type,value` rows.

use serde_json::{Map, Number, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(value).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => to_csv(value),
    }
}

fn is_plain_key(k: &str) -> bool {
    let mut chars = k.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

fn key_segment(k: &str) -> String {
    if is_plain_key(k) {
        format!(".{k}")
    } else {
        format!("[{}]", Value::String(k.to_string()))
    }
}

fn flatten(path: &str, value: &Value, rows: &mut Vec<[String; 3]>) {
    let row = |t: &str, v: String| [path.to_string(), t.to_string(), v];
    match value {
        Value::Null => rows.push(row("null", String::new())),
        Value::Bool(b) => rows.push(row("bool", b.to_string())),
        Value::Number(n) => rows.push(row("int", n.to_string())),
        Value::String(s) => rows.push(row("str", s.clone())),
        Value::Array(items) if items.is_empty() => rows.push(row("array", String::new())),
        Value::Object(map) if map.is_empty() => rows.push(row("object", String::new())),
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{path}[{i}]"), v, rows);
            }
        }
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&format!("{path}{}", key_segment(k)), v, rows);
            }
        }
    }
}

pub fn to_csv(value: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", value, &mut rows);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["path", "type", "value"]).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

enum Segment {
    Key(String),
    Index(usize),
}

fn parse_path(path: &str) -> Result<Vec<Segment>, String> {
    let mut out = Vec::new();
    let bytes = path.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'.' => {
                let end = path[i + 1..].find(['.', '[']).map_or(path.len(), |e| i + 1 + e);
                out.push(Segment::Key(path[i + 1..end].to_string()));
                i = end;
            }
            b'[' if bytes.get(i + 1) == Some(&b'"') => {
                let mut de = serde_json::Deserializer::from_str(&path[i + 1..]).into_iter::<String>();
                let key = de.next().ok_or("unterminated key")?.map_err(|e| e.to_string())?;
                let end = i + 1 + de.byte_offset();
                if bytes.get(end) != Some(&b']') {
                    return Err(format!("bad path `{path}`"));
                }
                out.push(Segment::Key(key));
                i = end + 1;
            }
            b'[' => {
                let end = path[i..].find(']').ok_or("unterminated index")? + i;
                out.push(Segment::Index(path[i + 1..end].parse().map_err(|_| format!("bad index in `{path}`"))?));
                i = end + 1;
            }
            _ => return Err(format!("bad path `{path}`")),
        }
    }
    Ok(out)
}

fn insert(slot: &mut Value, path: &[Segment], leaf: Value) -> Result<(), String> {
    let Some((first, rest)) = path.split_first() else {
        *slot = leaf;
        return Ok(());
    };
    match first {
        Segment::Key(k) => {
            if slot.is_null() {
                *slot = Value::Object(Map::new());
            }
            let map = slot.as_object_mut().ok_or("path mixes object and array")?;
            insert(map.entry(k.clone()).or_insert(Value::Null), rest, leaf)
        }
        Segment::Index(n) => {
            if slot.is_null() {
                *slot = Value::Array(Vec::new());
            }
            let arr = slot.as_array_mut().ok_or("path mixes object and array")?;
            if *n == arr.len() {
                arr.push(Value::Null);
            } else if *n > arr.len() {
                return Err("array indices out of order".into());
            }
            insert(&mut arr[*n], rest, leaf)
        }
    }
}

/// Inverse of [`to_csv`].
pub fn from_csv(text: &str) -> Result<Value, String> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut root = Value::Null;
    for rec in r.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        let (path, ty, val) = (&rec[0], &rec[1], &rec[2]);
        let leaf = match ty {
            "null" => Value::Null,
            "bool" => Value::Bool(val.parse().map_err(|_| format!("bad bool `{val}`"))?),
            "int" => Value::Number(val.parse::<Number>().map_err(|_| format!("bad int `{val}`"))?),
            "str" => Value::String(val.to_string()),
            "array" => Value::Array(Vec::new()),
            "object" => Value::Object(Map::new()),
            other => return Err(format!("unknown type `{other}`")),
        };
        insert(&mut root, &parse_path(path)?, leaf)?;
    }
    Ok(root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip() {
        let v = json!({
            "exact": "5/6",
            "sequence": [[1, 5, "5/7"], [2, 40, "40/49"]],
            "ideals": {"5/6": ["x", "y"], "2": []},
            "flag": true,
            "none": null,
            "empty": {},
            "text": "a,b \"c\""
        });
        let csv = to_csv(&v);
        assert!(csv.starts_with("path,type,value\n.exact,str,5/6\n"));
        assert_eq!(from_csv(&csv).unwrap(), v);
    }
}
