use serde_json::Value;

use pigen_core::altgen::GenerationCertificate;

pub struct Outcome {
    pub status: u8,
    pub text: String,
    pub json: Value,
}

impl Outcome {
    pub fn new(status: u8, text: String, json: Value) -> Self {
        Outcome { status, text, json }
    }
}

pub fn certificate_text(title: &str, c: &GenerationCertificate) -> String {
    let mut s = format!("{title}\n");
    s.push_str(&format!("branch: {}\n", c.branch));
    s.push_str(&format!(
        "|A| = {}, |B| = {}, |<A,B>| = {} of {}: {}\n",
        c.a_order,
        c.b_order,
        c.joint_order,
        c.ambient_order,
        if c.generated { "generated" } else { "NOT generated" }
    ));
    if let Some(g) = &c.conjugator {
        s.push_str(&format!("conjugator: {g}\n"));
    }
    for (k, v) in &c.details {
        s.push_str(&format!("{k}: {v}\n"));
    }
    s.push_str("A generators:\n");
    for g in &c.a_generators {
        s.push_str(&format!("  {g}\n"));
    }
    s.push_str("B generators:\n");
    for g in &c.b_generators {
        s.push_str(&format!("  {g}\n"));
    }
    s
}
