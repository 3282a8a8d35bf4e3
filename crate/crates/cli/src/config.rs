//! `key = value` defaults files. Values are injected as flags only for keys
//! the chosen subcommand understands and that were not given explicitly.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::{Command, CommandFactory};

use crate::Cli;

pub fn parse(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("line {}: expected `key = value`, got `{line}`", lineno + 1);
        };
        let key = key.trim().trim_start_matches("--").replace('_', "-");
        out.insert(key, value.trim().to_string());
    }
    Ok(out)
}

/// Finds `--config <file>` / `--config=<file>` in raw arguments.
fn config_path(args: &[String]) -> Option<String> {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().cloned();
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(p.to_string());
        }
    }
    None
}

fn subcommand<'a>(cmd: &'a Command, args: &[String]) -> Option<&'a Command> {
    args.iter().skip(1).find_map(|a| cmd.find_subcommand(a))
}

fn given(args: &[String], long: &str) -> bool {
    let flag = format!("--{long}");
    let prefix = format!("--{long}=");
    args.iter().any(|a| *a == flag || a.starts_with(&prefix))
}

/// Returns `args` with config-file defaults appended.
pub fn apply(args: Vec<String>) -> Result<Vec<String>> {
    let Some(path) = config_path(&args) else {
        return Ok(args);
    };
    let text = std::fs::read_to_string(Path::new(&path))
        .with_context(|| format!("cannot read config file {path}"))?;
    let values = parse(&text).with_context(|| format!("in config file {path}"))?;
    let cli = Cli::command();
    let Some(sub) = subcommand(&cli, &args) else {
        return Ok(args);
    };
    let mut out = args.clone();
    for arg in sub.get_arguments() {
        let Some(long) = arg.get_long() else { continue };
        let Some(value) = values.get(long) else {
            continue;
        };
        if given(&args, long) {
            continue;
        }
        if arg.get_action().takes_values() {
            out.push(format!("--{long}={value}"));
        } else if value == "true" {
            out.push(format!("--{long}"));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn parses_pairs_and_comments() {
        let m = parse("# defaults\nseed = 5\nmax_n=12\n\n").unwrap();
        assert_eq!(m["seed"], "5");
        assert_eq!(m["max-n"], "12");
        assert!(parse("seed 5").is_err());
    }

    #[test]
    fn explicit_flags_win() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.cfg");
        std::fs::write(&path, "seed = 5\nmodel = rrt\ngates = true\nunknown = 1\n").unwrap();
        let argv = args(&format!(
            "fringestat --config {} simulate --seed 9",
            path.display()
        ));
        let out = apply(argv).unwrap();
        assert!(out.contains(&"--model=rrt".to_string()));
        assert!(out.contains(&"--gates".to_string()));
        assert!(!out.iter().any(|a| a == "--seed=5"));
        assert!(!out.iter().any(|a| a.contains("unknown")));
    }
}
