//! Minimal `key=value` configuration files.
//!
//! Lines starting with `#` are comments; recognized keys preset check
//! parameters (`m_min`, `m_max`, `prime_bound`, `bins`, `seed`,
//! `threads`); command-line flags override config values.

use std::collections::BTreeMap;
use std::path::Path;

pub fn load(path: &Path) -> std::io::Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse(&text))
}

pub fn parse(text: &str) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some((k, v)) = line.split_once('=') {
            out.insert(k.trim().to_string(), v.trim().to_string());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    #[test]
    fn parses_pairs_and_comments() {
        let m = super::parse("# c\nm_max = 9\nprime_bound=500\n\nbad line\n");
        assert_eq!(m.get("m_max").map(String::as_str), Some("9"));
        assert_eq!(m.get("prime_bound").map(String::as_str), Some("500"));
        assert_eq!(m.len(), 2);
    }
}
