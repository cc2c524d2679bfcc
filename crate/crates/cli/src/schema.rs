//! Published JSON schemas, one per payload kind.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use jsonschema::Validator;
use serde_json::Value;

pub const SCHEMAS: [(&str, &str); 10] = [
    ("count", include_str!("../schemas/count.schema.json")),
    (
        "count-table",
        include_str!("../schemas/count-table.schema.json"),
    ),
    ("verify", include_str!("../schemas/verify.schema.json")),
    ("orbits", include_str!("../schemas/orbits.schema.json")),
    (
        "lyndon-params",
        include_str!("../schemas/lyndon-params.schema.json"),
    ),
    (
        "lyndon-check",
        include_str!("../schemas/lyndon-check.schema.json"),
    ),
    (
        "lyndon-construct",
        include_str!("../schemas/lyndon-construct.schema.json"),
    ),
    ("homomesy", include_str!("../schemas/homomesy.schema.json")),
    ("selftest", include_str!("../schemas/selftest.schema.json")),
    (
        "selftest-criterion",
        include_str!("../schemas/selftest-criterion.schema.json"),
    ),
];

fn validators() -> &'static BTreeMap<&'static str, Validator> {
    static V: OnceLock<BTreeMap<&'static str, Validator>> = OnceLock::new();
    V.get_or_init(|| {
        SCHEMAS
            .iter()
            .map(|(name, text)| {
                let schema: Value = serde_json::from_str(text).expect("schema is valid JSON");
                (
                    *name,
                    jsonschema::validator_for(&schema).expect("schema compiles"),
                )
            })
            .collect()
    })
}

/// Checks `payload` against the schema registered for `kind`.
pub fn validate(kind: &str, payload: &Value) -> Result<(), String> {
    let v = validators()
        .get(kind)
        .ok_or_else(|| format!("no schema for {kind:?}"))?;
    v.validate(payload)
        .map_err(|e| format!("schema violation at {}: {e}", e.instance_path))
}
