//! Plain-text `key = value` config files.
//!
//! One assignment per line, `#` starts a comment, blank lines ignored.
//! Keys are case-sensitive. Parsing keeps the last assignment of a
//! duplicated key.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default)]
pub struct KvFile {
    entries: BTreeMap<String, String>,
}

impl KvFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::config(format!(
                    "line {}: expected `key = value`, got {:?}",
                    idx + 1,
                    raw
                )));
            };
            let key = key.trim();
            let value = value.trim();
            if key.is_empty() {
                return Err(Error::config(format!("line {}: empty key", idx + 1)));
            }
            entries.insert(key.to_string(), value.to_string());
        }
        Ok(KvFile { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|s| s.as_str())
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(|s| s.as_str())
    }

    /// Apply `key=value` command-line overrides on top of the file.
    pub fn override_with(&mut self, assignments: &[String]) -> Result<()> {
        for a in assignments {
            let Some((k, v)) = a.split_once('=') else {
                return Err(Error::config(format!(
                    "override {:?} is not of the form key=value",
                    a
                )));
            };
            self.entries
                .insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(())
    }

    pub fn parse_value<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|_| {
                Error::config(format!(
                    "key {:?}: cannot parse {:?} as {}",
                    key,
                    raw,
                    std::any::type_name::<T>()
                ))
            }),
        }
    }

    pub fn parse_bool(&self, key: &str) -> Result<Option<bool>> {
        match self.get(key) {
            None => Ok(None),
            Some("true") | Some("1") | Some("yes") | Some("on") => Ok(Some(true)),
            Some("false") | Some("0") | Some("no") | Some("off") => Ok(Some(false)),
            Some(other) => Err(Error::config(format!(
                "key {:?}: expected a boolean, got {:?}",
                key, other
            ))),
        }
    }

    /// Comma-separated list value, e.g. `costs = 0.125, 0.25`.
    pub fn parse_list<T: std::str::FromStr>(&self, key: &str) -> Result<Option<Vec<T>>> {
        match self.get(key) {
            None => Ok(None),
            Some(raw) => {
                let mut out = Vec::new();
                for item in raw.split(',') {
                    let item = item.trim();
                    if item.is_empty() {
                        continue;
                    }
                    out.push(item.parse::<T>().map_err(|_| {
                        Error::config(format!(
                            "key {:?}: cannot parse list item {:?}",
                            key, item
                        ))
                    })?);
                }
                Ok(Some(out))
            }
        }
    }

    /// Reject keys outside the documented set.
    pub fn ensure_known_keys(&self, known: &[&str]) -> Result<()> {
        for key in self.keys() {
            if !known.contains(&key) {
                return Err(Error::config(format!("unknown config key {:?}", key)));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_whitespace() {
        let kv = KvFile::parse("# header\n a = 1 \n\nb= two # trailing\n").unwrap();
        assert_eq!(kv.get("a"), Some("1"));
        assert_eq!(kv.get("b"), Some("two"));
        assert_eq!(kv.get("c"), None);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(KvFile::parse("novalue\n").is_err());
        assert!(KvFile::parse("= 3\n").is_err());
    }

    #[test]
    fn parses_lists() {
        let kv = KvFile::parse("xs = 1, 2,3\n").unwrap();
        assert_eq!(kv.parse_list::<u64>("xs").unwrap().unwrap(), vec![1, 2, 3]);
    }
}
