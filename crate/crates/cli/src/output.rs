//! Text and record rendering helpers.

use probgen::probgen::Rational;

/// `p/q` even for integers, as used in records.
pub fn rational_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// One `key=value` record line. Values must not contain spaces.
#[derive(Default)]
pub struct Record {
    fields: Vec<(&'static str, String)>,
}

impl Record {
    pub fn new(kind: &str) -> Self {
        Record::default().field("kind", kind)
    }

    pub fn field(mut self, key: &'static str, value: impl ToString) -> Self {
        let value = value.to_string();
        debug_assert!(!value.contains(char::is_whitespace), "{key}={value:?}");
        self.fields.push((key, value));
        self
    }

    pub fn list<T: ToString>(self, key: &'static str, items: &[T]) -> Self {
        let joined: Vec<String> = items.iter().map(|x| x.to_string()).collect();
        self.field(key, joined.join(","))
    }

    pub fn line(&self) -> String {
        let parts: Vec<String> = self.fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
        parts.join(" ")
    }
}

/// Parses a record line back into key/value pairs.
#[cfg(test)]
pub fn parse_record(line: &str) -> Vec<(String, String)> {
    line.split_whitespace()
        .filter_map(|kv| kv.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use probgen::probgen::{parse_rational, ratio};

    #[test]
    fn integers_keep_their_denominator() {
        assert_eq!(rational_pq(&ratio(4, 2)), "2/1");
        assert_eq!(rational_pq(&ratio(0, 7)), "0/1");
        assert_eq!(rational_pq(&ratio(31, 99)), "31/99");
    }

    #[test]
    fn records_round_trip() {
        let values = [ratio(1, 3), ratio(0, 1), ratio(29, 45)];
        let pq: Vec<String> = values.iter().map(rational_pq).collect();
        let line = Record::new("nongen").field("group", "A6").list("values", &pq).line();
        assert_eq!(line, "kind=nongen group=A6 values=1/3,0/1,29/45");
        let fields = parse_record(&line);
        let parsed: Vec<Rational> = fields[2]
            .1
            .split(',')
            .map(|x| parse_rational(x).unwrap())
            .collect();
        assert_eq!(parsed, values);
    }
}
