//! `key = value` run files merged into the command line.

use std::collections::BTreeMap;

/// Keys that map onto boolean switches.
const SWITCHES: [&str; 2] = ["alt-labels", "timing"];

/// Parses `key = value` lines; `#` starts a comment. Keys may use `_` or `-`.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("line {}: expected `key = value`", i + 1));
        };
        let key = key.trim().replace('_', "-");
        if key.is_empty() {
            return Err(format!("line {}: empty key", i + 1));
        }
        out.insert(key, value.trim().to_string());
    }
    Ok(out)
}

/// Finds the value of `--config` in an argument list.
pub fn config_path(args: &[String]) -> Option<String> {
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        if arg == "--config" {
            return iter.next().cloned();
        }
        if let Some(path) = arg.strip_prefix("--config=") {
            return Some(path.to_string());
        }
    }
    None
}

/// Inserts the file's settings right after the subcommand, skipping keys
/// already given as flags so that the command line wins.
pub fn merge(args: &[String], settings: &BTreeMap<String, String>) -> Vec<String> {
    let given = |key: &str| {
        let flag = format!("--{key}");
        let eq = format!("--{key}=");
        args.iter().any(|a| *a == flag || a.starts_with(&eq))
    };
    let mut extra = Vec::new();
    for (key, value) in settings {
        if key == "config" || given(key) {
            continue;
        }
        if SWITCHES.contains(&key.as_str()) {
            if matches!(value.as_str(), "true" | "yes" | "1" | "on") {
                extra.push(format!("--{key}"));
            }
        } else {
            extra.push(format!("--{key}"));
            extra.push(value.clone());
        }
    }
    let split = args.len().min(2);
    let mut out: Vec<String> = args[..split].to_vec();
    out.extend(extra);
    out.extend_from_slice(&args[split..]);
    out
}
