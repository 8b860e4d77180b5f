//! Rationals travel through JSON as strings such as `"4/3"` or `"2"`.

pub mod rational_string {
    use num_rational::Rational64;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(q: &Rational64, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(q)
    }
}

pub mod rational_vec {
    use num_rational::Rational64;
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &[Rational64], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&q.to_string())?;
        }
        seq.end()
    }
}
