//! Command results as a small tree, rendered as indented text or JSON.

use serde_json::{json, Map, Value as Json};

#[derive(Debug, Clone, PartialEq)]
pub enum Out {
    Str(String),
    Bool(bool),
    Int(i64),
    List(Vec<Out>),
    Map(Vec<(String, Out)>),
}

impl Out {
    pub fn str(s: impl ToString) -> Out {
        Out::Str(s.to_string())
    }

    pub fn map(entries: Vec<(&str, Out)>) -> Out {
        Out::Map(entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
    }

    /// Looks up a key of a map node.
    pub fn get(&self, key: &str) -> Option<&Out> {
        match self {
            Out::Map(es) => es.iter().find(|(k, _)| k == key).map(|(_, v)| v),
            _ => None,
        }
    }

    pub fn as_str(&self) -> Option<&str> {
        match self {
            Out::Str(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Out::Bool(b) => Some(*b),
            _ => None,
        }
    }

    fn scalar(&self) -> Option<String> {
        match self {
            Out::Str(s) => Some(s.clone()),
            Out::Bool(b) => Some(b.to_string()),
            Out::Int(n) => Some(n.to_string()),
            _ => None,
        }
    }

    fn render(&self, indent: usize, buf: &mut String) {
        let pad = " ".repeat(indent);
        match self {
            Out::Map(es) => {
                for (k, v) in es {
                    match v.scalar() {
                        Some(s) if s.is_empty() => buf.push_str(&format!("{pad}{k}:\n")),
                        Some(s) => buf.push_str(&format!("{pad}{k}: {s}\n")),
                        None => {
                            buf.push_str(&format!("{pad}{k}:\n"));
                            v.render(indent + 2, buf);
                        }
                    }
                }
            }
            Out::List(items) => {
                for it in items {
                    match it.scalar() {
                        Some(s) => buf.push_str(&format!("{pad}- {s}\n")),
                        None => {
                            buf.push_str(&format!("{pad}-\n"));
                            it.render(indent + 2, buf);
                        }
                    }
                }
            }
            other => buf.push_str(&format!("{pad}{}\n", other.scalar().unwrap_or_default())),
        }
    }

    pub fn to_json(&self) -> Json {
        match self {
            Out::Str(s) => Json::String(s.clone()),
            Out::Bool(b) => Json::Bool(*b),
            Out::Int(n) => json!(n),
            Out::List(items) => Json::Array(items.iter().map(|o| o.to_json()).collect()),
            Out::Map(es) => {
                let mut m = Map::new();
                for (k, v) in es {
                    m.insert(k.clone(), v.to_json());
                }
                Json::Object(m)
            }
        }
    }
}

/// The output of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct Block {
    pub command: String,
    pub body: Out,
}

impl Block {
    pub fn to_text(&self) -> String {
        let mut buf = format!("> {}\n", self.command);
        self.body.render(2, &mut buf);
        buf
    }

    pub fn to_json(&self) -> Json {
        json!({ "command": self.command, "output": self.body.to_json() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_text() {
        let b = Block {
            command: "charts G".into(),
            body: Out::map(vec![("charts", Out::List(vec![Out::map(vec![("ideal", Out::str("(1)"))])]))]),
        };
        assert_eq!(b.to_text(), "> charts G\n  charts:\n    -\n      ideal: (1)\n");
        assert_eq!(b.to_json()["output"]["charts"][0]["ideal"], "(1)");
    }
}
