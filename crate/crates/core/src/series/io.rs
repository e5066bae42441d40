//! The form file: `{"weight": k, "truncation": N, "terms": [[r, n, "num/den"], ...]}`.
//!
//! Terms are strictly increasing in `(r, n)` and never zero. Only canonical
//! documents are accepted, so parse followed by emit is the identity on text
//! produced by [`FormFile::from_form`].

use serde::{Deserialize, Serialize};

use super::form::NearlyHolomorphicForm;
use super::rational::{format_rational, parse_rational};
use crate::error::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormFile {
    /// `null` only for the weightless zero form.
    pub weight: Option<i64>,
    pub truncation: usize,
    pub terms: Vec<(usize, usize, String)>,
}

impl FormFile {
    pub fn from_form(f: &NearlyHolomorphicForm) -> Self {
        FormFile {
            weight: f.weight(),
            truncation: f.truncation(),
            terms: f.terms().map(|(r, n, c)| (r, n, format_rational(c))).collect(),
        }
    }

    pub fn to_form(&self) -> Result<NearlyHolomorphicForm, SeriesError> {
        let mut prev: Option<(usize, usize)> = None;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (r, n, c) in &self.terms {
            if prev.is_some_and(|p| p >= (*r, *n)) {
                return Err(SeriesError::Format(format!("term ({r}, {n}) out of order")));
            }
            prev = Some((*r, *n));
            let c = parse_rational(c).map_err(|e| SeriesError::Format(e.to_string()))?;
            if num_traits::Zero::is_zero(&c) {
                return Err(SeriesError::Format(format!("zero coefficient at ({r}, {n})")));
            }
            terms.push((*r, *n, c));
        }
        NearlyHolomorphicForm::from_terms(self.weight, self.truncation, terms)
    }
}

impl NearlyHolomorphicForm {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(FormFile::from_form(self)).expect("form file is always serializable")
    }

    /// Compact JSON text of the form file.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&FormFile::from_form(self)).expect("form file is always serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, SeriesError> {
        let file: FormFile = serde_json::from_str(text).map_err(|e| SeriesError::Format(e.to_string()))?;
        file.to_form()
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Self, SeriesError> {
        let file = FormFile::deserialize(value).map_err(|e| SeriesError::Format(e.to_string()))?;
        file.to_form()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational::{frac, int};

    #[test]
    fn text_round_trip() {
        let f = NearlyHolomorphicForm::from_terms(Some(2), 3, [(1, 0, int(12)), (0, 0, int(-1)), (0, 2, frac(1, 3))])
            .unwrap();
        let text = f.to_json();
        assert_eq!(text, r#"{"weight":2,"truncation":3,"terms":[[0,0,"-1"],[0,2,"1/3"],[1,0,"12"]]}"#);
        let g = NearlyHolomorphicForm::from_json(&text).unwrap();
        assert_eq!(g, f);
        assert_eq!(g.to_json(), text);
    }

    #[test]
    fn rejects_non_canonical() {
        for bad in [
            r#"{"weight":2,"truncation":3,"terms":[[1,0,"12"],[0,0,"-1"]]}"#,
            r#"{"weight":2,"truncation":3,"terms":[[0,0,"0"]]}"#,
            r#"{"weight":2,"truncation":3,"terms":[[0,0,"2/4"]]}"#,
            r#"{"weight":2,"truncation":3,"terms":[[0,4,"1"]]}"#,
            r#"{"weight":null,"truncation":3,"terms":[[0,0,"1"]]}"#,
            r#"{"weight":2,"truncation":3,"terms":[],"extra":1}"#,
        ] {
            assert!(NearlyHolomorphicForm::from_json(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn weightless_zero() {
        let z = NearlyHolomorphicForm::zero(7);
        assert_eq!(z.to_json(), r#"{"weight":null,"truncation":7,"terms":[]}"#);
        assert_eq!(NearlyHolomorphicForm::from_json(&z.to_json()).unwrap(), z);
    }
}
