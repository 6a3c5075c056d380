//! JSON interchange for automata.
//!
//! The DFA layout is
//! `{"alphabet": ["a","b"], "states": 3, "initial": 0, "finals": [2],
//!   "transitions": {"a": [1,2,0], "b": [0,0,1]}}`
//! where `transitions[x][q]` is δ(q, x) and every alphabet key lists exactly
//! `states` targets. The NFA variant replaces single targets with arrays,
//! uses an `"initials"` array and may carry an `"epsilon"` key. Emission is
//! canonical: fixed key order, transition keys in alphabet order, compact
//! whitespace. Parsing ignores unknown keys.

use serde_json::{json, Map, Value};

use crate::alphabet::Alphabet;
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::nfa::Nfa;
use crate::ops::DirectProduct;

pub fn dfa_to_json(d: &Dfa) -> Value {
    let mut transitions = Map::new();
    for letter in d.alphabet().iter() {
        transitions.insert(letter.name.to_string(), json!(d.row(letter.index)));
    }
    json!({
        "alphabet": d.alphabet().names().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "states": d.state_count(),
        "initial": d.initial(),
        "finals": d.finals().collect::<Vec<_>>(),
        "transitions": transitions,
    })
}

pub fn dfa_to_string(d: &Dfa) -> String {
    dfa_to_json(d).to_string()
}

pub fn dfa_from_str(text: &str) -> Result<Dfa> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    dfa_from_json(&value)
}

pub fn dfa_from_json(value: &Value) -> Result<Dfa> {
    let obj = as_object(value)?;
    let alphabet = parse_alphabet(obj)?;
    let states = parse_usize(obj, "states")?;
    let initial = parse_usize(obj, "initial")?;
    let finals = parse_state_array(require(obj, "finals")?, "finals")?;
    let transitions = as_transitions(require(obj, "transitions")?, &alphabet)?;

    let mut delta = Vec::with_capacity(alphabet.len());
    for letter in alphabet.iter() {
        let row = parse_state_array(transitions[letter.index], "transition row")?;
        if row.len() != states {
            return Err(Error::Json(format!(
                "transition row for '{}' has {} entries, expected {}",
                letter.name,
                row.len(),
                states
            )));
        }
        delta.push(row);
    }
    Dfa::new(states, alphabet, delta, initial, finals)
}

pub fn nfa_to_json(nfa: &Nfa) -> Value {
    let mut transitions = Map::new();
    for letter in nfa.alphabet().iter() {
        let rows: Vec<Vec<usize>> = (0..nfa.state_count())
            .map(|q| nfa.targets(q, letter.index).iter().collect())
            .collect();
        transitions.insert(letter.name.to_string(), json!(rows));
    }
    let mut out = Map::new();
    out.insert(
        "alphabet".into(),
        json!(nfa
            .alphabet()
            .names()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()),
    );
    out.insert("states".into(), json!(nfa.state_count()));
    out.insert("initials".into(), json!(nfa.initials().iter().collect::<Vec<_>>()));
    out.insert("finals".into(), json!(nfa.finals().iter().collect::<Vec<_>>()));
    out.insert("transitions".into(), Value::Object(transitions));
    if nfa.has_epsilon() {
        let eps: Vec<Vec<usize>> = (0..nfa.state_count())
            .map(|q| nfa.epsilon_targets(q).unwrap().iter().collect())
            .collect();
        out.insert("epsilon".into(), json!(eps));
    }
    Value::Object(out)
}

pub fn nfa_to_string(nfa: &Nfa) -> String {
    nfa_to_json(nfa).to_string()
}

pub fn nfa_from_str(text: &str) -> Result<Nfa> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    nfa_from_json(&value)
}

pub fn nfa_from_json(value: &Value) -> Result<Nfa> {
    let obj = as_object(value)?;
    let alphabet = parse_alphabet(obj)?;
    let states = parse_usize(obj, "states")?;
    let initials = parse_state_array(require(obj, "initials")?, "initials")?;
    let finals = parse_state_array(require(obj, "finals")?, "finals")?;
    let transitions = as_transitions(require(obj, "transitions")?, &alphabet)?;

    let mut nfa = if obj.contains_key("epsilon") {
        Nfa::with_epsilon(states, alphabet.clone(), initials, finals)?
    } else {
        Nfa::new(states, alphabet.clone(), initials, finals)?
    };
    for letter in alphabet.iter() {
        let rows = transitions[letter.index]
            .as_array()
            .ok_or_else(|| Error::Json("transition rows must be arrays".into()))?;
        if rows.len() != states {
            return Err(Error::Json(format!(
                "transition table for '{}' has {} rows, expected {}",
                letter.name,
                rows.len(),
                states
            )));
        }
        for (q, row) in rows.iter().enumerate() {
            for target in parse_state_array(row, "transition targets")? {
                nfa.add_transition(q, letter.index, target)?;
            }
        }
    }
    if let Some(eps) = obj.get("epsilon") {
        let rows = eps
            .as_array()
            .ok_or_else(|| Error::Json("epsilon must be an array of arrays".into()))?;
        if rows.len() != states {
            return Err(Error::Json(format!(
                "epsilon table has {} rows, expected {}",
                rows.len(),
                states
            )));
        }
        for (q, row) in rows.iter().enumerate() {
            for target in parse_state_array(row, "epsilon targets")? {
                nfa.add_epsilon(q, target)?;
            }
        }
    }
    Ok(nfa)
}

/// Census counts as a flat JSON object.
pub fn census_to_json(census: &crate::ops::SubsetCensus) -> Value {
    json!({
        "left_finals": census.left_finals,
        "nonfinal_head": census.nonfinal_head,
        "final_head": census.final_head,
        "right_only": census.right_only,
        "total": census.total,
    })
}

/// A labeled product serializes as the DFA plus a `"labels"` side table;
/// `null` marks the sink a side gained during completion.
pub fn product_to_json(product: &DirectProduct) -> Value {
    let mut out = match dfa_to_json(&product.dfa) {
        Value::Object(map) => map,
        _ => unreachable!(),
    };
    let labels: Vec<Value> = product
        .labels
        .iter()
        .map(|l| json!({"left": l.left, "right": l.right}))
        .collect();
    out.insert("labels".into(), json!(labels));
    Value::Object(out)
}

fn as_object(value: &Value) -> Result<&Map<String, Value>> {
    value
        .as_object()
        .ok_or_else(|| Error::Json("expected a JSON object".into()))
}

fn require<'v>(obj: &'v Map<String, Value>, key: &str) -> Result<&'v Value> {
    obj.get(key)
        .ok_or_else(|| Error::Json(format!("missing key '{key}'")))
}

fn parse_alphabet(obj: &Map<String, Value>) -> Result<Alphabet> {
    let entries = require(obj, "alphabet")?
        .as_array()
        .ok_or_else(|| Error::Json("alphabet must be an array".into()))?;
    let mut names = Vec::with_capacity(entries.len());
    for entry in entries {
        let s = entry
            .as_str()
            .ok_or_else(|| Error::Json("alphabet entries must be strings".into()))?;
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => names.push(c),
            _ => {
                return Err(Error::Json(format!(
                    "alphabet entry '{s}' must be a single character"
                )))
            }
        }
    }
    Alphabet::new(names)
}

fn parse_usize(obj: &Map<String, Value>, key: &str) -> Result<usize> {
    require(obj, key)?
        .as_u64()
        .map(|v| v as usize)
        .ok_or_else(|| Error::Json(format!("'{key}' must be a non-negative integer")))
}

fn parse_state_array(value: &Value, what: &str) -> Result<Vec<usize>> {
    value
        .as_array()
        .ok_or_else(|| Error::Json(format!("{what} must be an array")))?
        .iter()
        .map(|v| {
            v.as_u64()
                .map(|v| v as usize)
                .ok_or_else(|| Error::Json(format!("{what} entries must be integers")))
        })
        .collect()
}

/// The transition object in alphabet order; keys must match the alphabet
/// exactly.
fn as_transitions<'v>(value: &'v Value, alphabet: &Alphabet) -> Result<Vec<&'v Value>> {
    let map = value
        .as_object()
        .ok_or_else(|| Error::Json("transitions must be an object".into()))?;
    for key in map.keys() {
        let mut chars = key.chars();
        let known = matches!((chars.next(), chars.next()),
            (Some(c), None) if alphabet.contains(c));
        if !known {
            return Err(Error::Json(format!(
                "transition key '{key}' is not in the alphabet"
            )));
        }
    }
    alphabet
        .iter()
        .map(|l| {
            map.get(&l.name.to_string()).ok_or_else(|| {
                Error::Json(format!("missing transitions for letter '{}'", l.name))
            })
        })
        .collect()
}
