//! Workspace files: a single JSON document with named field, flow, and
//! candidate-element definitions. All references must resolve.

use crate::expr::parse_element;
use anyhow::{anyhow, bail, Context, Result};
use qpflow_core::field::{FieldElement, NumberField};
use qpflow_core::flow::Flow;
use qpflow_core::json::{element_from_json, field_from_json};
use qpflow_core::rational::Rat;
use serde_json::Value;
use std::collections::BTreeMap;
use std::path::Path;

pub struct Workspace {
    pub fields: BTreeMap<String, NumberField>,
    pub flows: BTreeMap<String, Flow>,
    pub candidates: BTreeMap<String, FieldElement>,
}

impl Workspace {
    pub fn load(path: &Path) -> Result<Workspace> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read workspace {}", path.display()))?;
        let doc: Value = serde_json::from_str(&text)
            .with_context(|| format!("workspace {} is not valid JSON", path.display()))?;
        Self::from_value(&doc)
    }

    pub fn from_value(doc: &Value) -> Result<Workspace> {
        let obj = doc
            .as_object()
            .ok_or_else(|| anyhow!("workspace must be a JSON object"))?;
        let mut fields = BTreeMap::new();
        if let Some(defs) = obj.get("fields") {
            let map = defs
                .as_object()
                .ok_or_else(|| anyhow!("\"fields\" must be an object"))?;
            for (name, def) in map {
                let field = field_from_json(def)
                    .map_err(|e| anyhow!("field {name:?}: {e}"))?;
                fields.insert(name.clone(), field);
            }
        }

        let mut ws = Workspace {
            fields,
            flows: BTreeMap::new(),
            candidates: BTreeMap::new(),
        };

        if let Some(defs) = obj.get("flows") {
            let map = defs
                .as_object()
                .ok_or_else(|| anyhow!("\"flows\" must be an object"))?;
            for (name, def) in map {
                let flow = ws
                    .parse_flow(def)
                    .map_err(|e| anyhow!("flow {name:?}: {e}"))?;
                ws.flows.insert(name.clone(), flow);
            }
        }

        if let Some(defs) = obj.get("candidates") {
            let map = defs
                .as_object()
                .ok_or_else(|| anyhow!("\"candidates\" must be an object"))?;
            for (name, def) in map {
                let obj = def
                    .as_object()
                    .ok_or_else(|| anyhow!("candidate {name:?} must be an object"))?;
                let field_name = obj
                    .get("field")
                    .and_then(Value::as_str)
                    .ok_or_else(|| anyhow!("candidate {name:?} needs a \"field\" name"))?;
                let field = ws.field(field_name)?.clone();
                let value = obj
                    .get("value")
                    .ok_or_else(|| anyhow!("candidate {name:?} needs a \"value\""))?;
                let elem = ws
                    .parse_element_spec(&field, value)
                    .map_err(|e| anyhow!("candidate {name:?}: {e}"))?;
                ws.candidates.insert(name.clone(), elem);
            }
        }
        Ok(ws)
    }

    fn parse_flow(&self, def: &Value) -> Result<Flow> {
        let obj = def
            .as_object()
            .ok_or_else(|| anyhow!("flow definition must be an object"))?;
        let label = obj
            .get("scale_label")
            .and_then(Value::as_str)
            .map(str::to_string);
        if let Some(numeric) = obj.get("numeric") {
            let arr = numeric
                .as_array()
                .ok_or_else(|| anyhow!("\"numeric\" must be an array of decimal strings"))?;
            let decimals: Result<Vec<String>> = arr
                .iter()
                .map(|d| {
                    d.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| anyhow!("numeric component must be a string"))
                })
                .collect();
            return Ok(Flow::numeric(decimals?, label)?);
        }
        let field_name = obj
            .get("field")
            .and_then(Value::as_str)
            .ok_or_else(|| anyhow!("flow needs a \"field\" name (or \"numeric\" components)"))?;
        let field = self.field(field_name)?.clone();
        let comp_v = obj
            .get("components")
            .and_then(Value::as_array)
            .ok_or_else(|| anyhow!("flow needs a \"components\" array"))?;
        let mut components = Vec::with_capacity(comp_v.len());
        for c in comp_v {
            components.push(self.parse_element_spec(&field, c)?);
        }
        Ok(Flow::exact(&field, components, label)?)
    }

    /// An element is either an expression string over `g` or an array of
    /// coordinate strings.
    pub fn parse_element_spec(&self, field: &NumberField, v: &Value) -> Result<FieldElement> {
        match v {
            Value::String(expr) => parse_element(field, expr),
            Value::Array(_) => Ok(element_from_json(field, v)?),
            _ => bail!("element must be an expression string or a coordinate array"),
        }
    }

    pub fn field(&self, name: &str) -> Result<&NumberField> {
        self.fields
            .get(name)
            .ok_or_else(|| anyhow!("unknown field {name:?}"))
    }

    pub fn flow(&self, name: &str) -> Result<&Flow> {
        self.flows
            .get(name)
            .ok_or_else(|| anyhow!("unknown flow {name:?}"))
    }

    /// Resolves a --candidate argument: a named workspace candidate, or an
    /// inline expression in the given field.
    pub fn resolve_candidate(&self, field: &NumberField, spec: &str) -> Result<FieldElement> {
        if let Some(named) = self.candidates.get(spec) {
            if named.field() != field {
                bail!("candidate {spec:?} lives in a different field than the flow");
            }
            return Ok(named.clone());
        }
        parse_element(field, spec)
    }
}

/// Parses a comma-separated list of point coordinates (decimals or p/q).
pub fn parse_point(s: &str) -> Result<Vec<Rat>> {
    s.split(',')
        .map(|part| Ok(qpflow_core::rational::parse_rat(part.trim())?))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Value {
        json!({
            "fields": {
                "sqrt5": { "min_poly": [-5, 0, 1], "root_index": 1 },
                "sqrt2": { "min_poly": [-2, 0, 1], "root_index": 1 }
            },
            "flows": {
                "example1": {
                    "field": "sqrt5",
                    "components": ["1", "g"],
                    "scale_label": "theta^-1 = sqrt(2)"
                },
                "coords": { "field": "sqrt2", "components": [["1", "0"], ["0", "1"]] },
                "pi": { "numeric": ["1", "3.14159265358979323846"] }
            },
            "candidates": {
                "u": { "field": "sqrt5", "value": "2 + g" }
            }
        })
    }

    #[test]
    fn loads_and_resolves() {
        let ws = Workspace::from_value(&sample()).unwrap();
        assert_eq!(ws.fields.len(), 2);
        assert_eq!(ws.flows.len(), 3);
        let flow = ws.flow("example1").unwrap();
        assert_eq!(flow.scale_label(), Some("theta^-1 = sqrt(2)"));
        let f = ws.field("sqrt5").unwrap();
        let u = ws.resolve_candidate(f, "u").unwrap();
        assert_eq!(u, parse_element(f, "2+g").unwrap());
        let inline = ws.resolve_candidate(f, "(1+g)/2").unwrap();
        assert_eq!(inline, parse_element(f, "(1+g)/2").unwrap());
    }

    #[test]
    fn unknown_references_fail() {
        let ws = Workspace::from_value(&sample()).unwrap();
        assert!(ws.flow("nope").is_err());
        assert!(ws.field("nope").is_err());
        let bad = json!({
            "flows": { "f": { "field": "missing", "components": ["1", "g"] } }
        });
        assert!(Workspace::from_value(&bad).is_err());
    }

    #[test]
    fn candidate_field_mismatch_caught() {
        let ws = Workspace::from_value(&sample()).unwrap();
        let f2 = ws.field("sqrt2").unwrap();
        assert!(ws.resolve_candidate(f2, "u").is_err());
    }

    #[test]
    fn point_parsing() {
        let p = parse_point("0, 0.5, 1/3").unwrap();
        assert_eq!(p.len(), 3);
        assert!(parse_point("0, x").is_err());
    }
}
