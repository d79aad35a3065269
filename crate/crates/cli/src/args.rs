//! Flag parsing and config-file merging. Flags win over config values.

use std::collections::BTreeMap;

#[derive(Debug)]
pub enum ArgError {
    Usage(String),
}

impl std::fmt::Display for ArgError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ArgError::Usage(m) => write!(f, "{m}"),
        }
    }
}

/// Raw string options collected from the command line and the optional
/// config file.
#[derive(Debug, Default)]
pub struct Options {
    values: BTreeMap<String, String>,
    flags: Vec<String>,
}

const VALUE_KEYS: [&str; 12] = [
    "gram", "point", "window", "variant", "expr", "expr-f", "expr-g", "oracle", "seed", "suite",
    "chars", "bound",
];
const PATH_KEYS: [&str; 2] = ["svg", "config"];
const BOOL_KEYS: [&str; 1] = ["tame"];

impl Options {
    pub fn parse(args: &[String]) -> Result<Self, ArgError> {
        let mut opts = Options::default();
        let mut i = 0;
        while i < args.len() {
            let arg = &args[i];
            let Some(name) = arg.strip_prefix("--") else {
                return Err(ArgError::Usage(format!("unexpected argument `{arg}`")));
            };
            if BOOL_KEYS.contains(&name) {
                opts.flags.push(name.to_string());
                i += 1;
                continue;
            }
            if VALUE_KEYS.contains(&name) || PATH_KEYS.contains(&name) {
                let Some(value) = args.get(i + 1) else {
                    return Err(ArgError::Usage(format!("flag --{name} needs a value")));
                };
                opts.values.insert(name.to_string(), value.clone());
                i += 2;
                continue;
            }
            return Err(ArgError::Usage(format!("unknown flag --{name}")));
        }
        // Merge config-file values underneath the explicit flags.
        if let Some(path) = opts.values.get("config").cloned() {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| ArgError::Usage(format!("cannot read config {path}: {e}")))?;
            let json: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| ArgError::Usage(format!("config {path} is not JSON: {e}")))?;
            let serde_json::Value::Object(map) = json else {
                return Err(ArgError::Usage(format!(
                    "config {path} must be a JSON object"
                )));
            };
            for (key, value) in map {
                if BOOL_KEYS.contains(&key.as_str()) {
                    if value.as_bool() == Some(true) && !opts.flags.contains(&key) {
                        opts.flags.push(key);
                    }
                    continue;
                }
                if opts.values.contains_key(&key) {
                    continue;
                }
                let rendered = match value {
                    serde_json::Value::String(s) => s,
                    other => other.to_string(),
                };
                opts.values.insert(key, rendered);
            }
        }
        Ok(opts)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn require(&self, key: &str) -> Result<&str, ArgError> {
        self.get(key)
            .ok_or_else(|| ArgError::Usage(format!("missing required flag --{key}")))
    }

    pub fn has_flag(&self, key: &str) -> bool {
        self.flags.iter().any(|f| f == key)
    }
}
