//! Text and JSON forms of elements, squares and coefficients.

use serde_json::{json, Value as Json};
use tdhopf_core::{
    Coefficient, Monomial, Space, TdAlgebra, TensorElement, TensorSquare, TensorTriple, TensorWord, WordCombination,
};

use crate::parse::{parse_coefficient, Diagnostic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub fn word_json(w: &TensorWord) -> Json {
    Json::Array(w.letters().iter().map(|m| json!(m.exponents())).collect())
}

pub fn combination_json(c: &WordCombination) -> Json {
    Json::Array(
        c.iter()
            .map(|(w, k)| json!({ "coeff": k.to_string(), "word": word_json(w) }))
            .collect(),
    )
}

pub fn element_json(e: &TensorElement) -> Json {
    combination_json(e.terms())
}

pub fn square_json(s: &TensorSquare) -> Json {
    Json::Array(
        s.iter()
            .map(|((l, r), k)| json!({ "coeff": k.to_string(), "left": word_json(l), "right": word_json(r) }))
            .collect(),
    )
}

pub fn triple_json(t: &TensorTriple) -> Json {
    Json::Array(
        t.iter()
            .map(|((a, b, c), k)| json!({ "coeff": k.to_string(), "words": [word_json(a), word_json(b), word_json(c)] }))
            .collect(),
    )
}

pub fn coefficient_json(c: &Coefficient) -> Json {
    Json::String(c.to_string())
}

fn json_error(message: impl Into<String>) -> Diagnostic {
    Diagnostic {
        offset: 0,
        message: message.into(),
        expected: Vec::new(),
    }
}

fn parse_word_json(v: &Json, vars: usize) -> Result<TensorWord, Diagnostic> {
    let letters = v.as_array().ok_or_else(|| json_error("word must be an array of exponent arrays"))?;
    let mut out = Vec::with_capacity(letters.len());
    for letter in letters {
        let exps = letter.as_array().ok_or_else(|| json_error("letter must be an array of exponents"))?;
        if exps.len() != vars {
            return Err(json_error(format!("letter has {} exponents, expected {vars}", exps.len())));
        }
        let exps = exps
            .iter()
            .map(|e| e.as_u64().and_then(|n| u16::try_from(n).ok()).ok_or_else(|| json_error("exponent must be a small nonnegative integer")))
            .collect::<Result<Vec<u16>, _>>()?;
        out.push(Monomial::from_exponents(&exps));
    }
    Ok(TensorWord::new(out))
}

/// Reads the element JSON form. The space is `Ш⁺` exactly when the empty
/// word occurs.
pub fn parse_element_json(text: &str, alg: &TdAlgebra) -> Result<TensorElement, Diagnostic> {
    let v: Json = serde_json::from_str(text).map_err(|e| json_error(format!("invalid JSON: {e}")))?;
    let terms = v.as_array().ok_or_else(|| json_error("element must be an array of terms"))?;
    let mut out = WordCombination::zero();
    for t in terms {
        let coeff = t
            .get("coeff")
            .and_then(Json::as_str)
            .ok_or_else(|| json_error("term needs a string \"coeff\""))?;
        let coeff = parse_coefficient(coeff, alg)?;
        let word = parse_word_json(t.get("word").ok_or_else(|| json_error("term needs a \"word\""))?, alg.vars())?;
        out.add_term(word, coeff);
    }
    let space = if out.keys().any(TensorWord::is_empty) {
        Space::Plus
    } else {
        Space::Lambda
    };
    TensorElement::new(space, out).map_err(|e| json_error(e.to_string()))
}
