use serde::Serialize;
use serde_json::{Map, Value};

/// Keys whose array values are vertex sets and get a 1-based echo.
const SET_KEYS: [&str; 4] = ["set", "s", "center", "witness"];

fn add_one_based(v: &mut Value) {
    match v {
        Value::Object(map) => {
            let mut echoes = Vec::new();
            for (k, child) in map.iter_mut() {
                if SET_KEYS.contains(&k.as_str()) {
                    if let Value::Array(items) = child {
                        let shifted: Option<Vec<Value>> = items
                            .iter()
                            .map(|x| x.as_u64().map(|i| Value::from(i + 1)))
                            .collect();
                        if let Some(shifted) = shifted {
                            echoes.push((format!("{k}_one_based"), Value::Array(shifted)));
                            continue;
                        }
                    }
                }
                add_one_based(child);
            }
            map.extend(echoes);
        }
        Value::Array(items) => items.iter_mut().for_each(add_one_based),
        _ => {}
    }
}

/// `{"config": ..., "result": ...}`, with 1-based echoes when the graph is
/// a named family.
pub fn envelope(config: &Value, result: &impl Serialize, one_based: bool) -> String {
    let mut result = serde_json::to_value(result).expect("reports serialize");
    if one_based {
        add_one_based(&mut result);
    }
    let mut out = Map::new();
    out.insert("config".into(), config.clone());
    out.insert("result".into(), result);
    serde_json::to_string_pretty(&Value::Object(out)).expect("json")
}

pub fn set_text(s: fairset_core::VertexSet, one_based: bool) -> String {
    let plain: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    let plain = format!("[{}]", plain.join(","));
    if one_based {
        let labels: Vec<String> = s.iter().map(|v| format!("v{}", v + 1)).collect();
        format!("{plain} ({})", labels.join(","))
    } else {
        plain
    }
}
