//! `builtin:<family>[:<param>=<value>]*` identifiers.

use equigenus::localize::dataset;
use equigenus::quasitoric::{simplex_pair, square_pair, Manifold};

use crate::CliError;

/// One row of `list-builtins`.
pub struct BuiltinInfo {
    pub id: &'static str,
    pub n: &'static str,
    pub k: &'static str,
    pub points: &'static str,
    pub description: &'static str,
}

pub const BUILTINS: [BuiltinInfo; 5] = [
    BuiltinInfo {
        id: "builtin:cp{n}:eps=<+|-…>",
        n: "n",
        k: "n",
        points: "n+1",
        description: "simplex pair (I : eps); eps of all '-' is the standard structure",
    },
    BuiltinInfo {
        id: "builtin:square:eps=e1,e2:delta=d1,d2",
        n: "2",
        k: "2",
        points: "4",
        description: "square family; needs eps = ±1 and e1*e2 - d1*d2 = ±1",
    },
    BuiltinInfo {
        id: "builtin:s6",
        n: "3",
        k: "2",
        points: "2",
        description: "6-sphere with a 2-torus action",
    },
    BuiltinInfo {
        id: "builtin:flag3",
        n: "3",
        k: "3",
        points: "6",
        description: "flag manifold U(3)/T^3",
    },
    BuiltinInfo {
        id: "builtin:cp1",
        n: "1",
        k: "1",
        points: "2",
        description: "CP^1 with weights 1 and -1, both signs +1",
    },
];

fn bad(id: &str, why: &str) -> CliError {
    CliError::Input(format!("bad builtin `{id}`: {why}"))
}

fn ints(id: &str, s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| bad(id, &format!("`{t}` is not an integer"))))
        .collect()
}

fn params<'a>(id: &str, parts: &[&'a str]) -> Result<Vec<(&'a str, &'a str)>, CliError> {
    parts
        .iter()
        .map(|p| p.split_once('=').ok_or_else(|| bad(id, &format!("`{p}` is not key=value"))))
        .collect()
}

/// Resolves an identifier with the `builtin:` prefix already removed.
pub fn resolve(id: &str) -> Result<Manifold, CliError> {
    let parts: Vec<&str> = id.split(':').collect();
    let family = parts[0];
    let kv = params(id, &parts[1..])?;
    if let Some(n) = family.strip_prefix("cp").and_then(|d| d.parse::<usize>().ok()) {
        if n == 0 {
            return Err(bad(id, "dimension must be positive"));
        }
        let eps = match kv.as_slice() {
            [] => vec![-1; n],
            [("eps", e)] => e
                .chars()
                .map(|c| match c {
                    '+' => Ok(1),
                    '-' => Ok(-1),
                    _ => Err(bad(id, "eps is a string of '+' and '-'")),
                })
                .collect::<Result<Vec<i64>, _>>()?,
            _ => return Err(bad(id, "cp takes only eps=…")),
        };
        if eps.len() != n {
            return Err(bad(id, &format!("eps needs {n} signs")));
        }
        return Ok(Manifold::Quasitoric(simplex_pair(n, &eps)?));
    }
    match family {
        "square" => {
            let mut eps = vec![-1, -1];
            let mut delta = vec![0, 0];
            for (k, v) in kv {
                match k {
                    "eps" => eps = ints(id, v)?,
                    "delta" => delta = ints(id, v)?,
                    _ => return Err(bad(id, &format!("unknown parameter `{k}`"))),
                }
            }
            if eps.len() != 2 || delta.len() != 2 {
                return Err(bad(id, "eps and delta take two integers each"));
            }
            Ok(Manifold::Quasitoric(square_pair(eps[0], eps[1], delta[0], delta[1])?))
        }
        "s6" | "flag3" | "cp1" if kv.is_empty() => {
            Ok(Manifold::FixedPoints(dataset(family).map_err(|e| CliError::Input(e.to_string()))?))
        }
        _ => Err(bad(id, "unknown family")),
    }
}
