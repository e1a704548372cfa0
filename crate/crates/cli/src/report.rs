//! Command output in the two formats.

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Kv,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub kv: Vec<(String, String)>,
}

impl Report {
    /// One value, printed bare as text and as `key=value`.
    pub fn value(key: &str, value: impl ToString) -> Self {
        let v = value.to_string();
        Report { text: format!("{v}\n"), kv: vec![(key.to_string(), v)] }
    }

    /// A multi-line block, keyed `key.0`, `key.1`, ... in kv form.
    pub fn block(key: &str, text: impl ToString) -> Self {
        let text = text.to_string();
        let kv = text.lines().enumerate().map(|(i, l)| (format!("{key}.{i}"), l.to_string())).collect();
        Report { text, kv }
    }

    pub fn push_kv(&mut self, key: impl ToString, value: impl ToString) {
        self.kv.push((key.to_string(), value.to_string()));
    }

    pub fn push_line(&mut self, line: impl AsRef<str>) {
        self.text.push_str(line.as_ref());
        self.text.push('\n');
    }

    pub fn append(&mut self, other: Report) {
        self.text.push_str(&other.text);
        self.kv.extend(other.kv);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Kv => self.kv.iter().map(|(k, v)| format!("{k}={v}\n")).collect(),
        }
    }
}

/// Joins per-file reports in input order, headed by the file name when there
/// is more than one.
pub fn render_batch(items: &[(String, Report)], format: Format) -> String {
    let mut out = String::new();
    for (path, r) in items {
        if items.len() > 1 {
            match format {
                Format::Text => out.push_str(&format!("# {path}\n")),
                Format::Kv => out.push_str(&format!("file={path}\n")),
            }
        }
        out.push_str(&r.render(format));
    }
    out
}
