use std::fs;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::json::parse_text;

/// Inline JSON, or `@path` to read it from a file.
pub fn load(arg: &str) -> Result<Value> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Error::input(format!("cannot read `{path}`: {e}")))?;
            parse_text(&text)
        }
        None if arg == "interval" => Ok(Value::String(arg.into())),
        None => parse_text(arg),
    }
}

pub fn required<'a>(arg: &'a Option<String>, flag: &str, verb: &str) -> Result<&'a str> {
    arg.as_deref().ok_or_else(|| Error::input(format!("`{verb}` needs --{flag} here")))
}

/// Decimal or `0x`-prefixed hexadecimal.
pub fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed `{s}`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds() {
        assert_eq!(parse_seed("0xD0B0"), Ok(0xD0B0));
        assert_eq!(parse_seed("53424"), Ok(0xD0B0));
        assert!(parse_seed("0xZZ").is_err());
    }

    #[test]
    fn inline_and_file() {
        assert_eq!(load("interval").unwrap(), Value::String("interval".into()));
        let err = load("{\"atoms\": }").unwrap_err().to_string();
        assert!(err.contains("line 1, column"), "{err}");
        let path = std::env::temp_dir().join(format!("cd-input-{}.json", std::process::id()));
        fs::write(&path, "[1, 2]").unwrap();
        assert_eq!(load(&format!("@{}", path.display())).unwrap(), serde_json::json!([1, 2]));
        fs::remove_file(path).unwrap();
        assert!(load("@/nonexistent/file.json").is_err());
    }
}
