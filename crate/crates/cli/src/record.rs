//! JSONL and CSV records for `enumerate`.
//!
//! Columns, in order: `a,b,c`, then `seed,word,twin` with `--with-word`,
//! then `m,n,variant` with `--with-params`. Missing values are `null` in
//! JSONL and empty in CSV. The 60 family's `(1,1,1)` has no word and no
//! parameters; `variant` is `null` for 120.

use std::io::{self, Write};

use clap::ValueEnum;

use eisenstein::{DerivationWord, Family, ParamPair, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Jsonl,
    Csv,
}

pub struct Record<'a> {
    family: Family,
    triple: Triple,
    word: Option<&'a DerivationWord>,
    params: Option<&'a ParamPair>,
}

impl<'a> Record<'a> {
    pub fn new(
        family: Family,
        triple: Triple,
        word: Option<&'a DerivationWord>,
        params: Option<&'a ParamPair>,
    ) -> Self {
        Self { family, triple, word, params }
    }

    fn variant(&self) -> Option<&'static str> {
        match self.family {
            Family::Sixty => self.params.map(|p| p.variant().name()),
            Family::OneTwenty => None,
        }
    }
}

pub struct RecordWriter<'w> {
    out: &'w mut dyn Write,
    format: Format,
    with_word: bool,
    with_params: bool,
}

impl<'w> RecordWriter<'w> {
    /// Writes the CSV header immediately.
    pub fn new(out: &'w mut dyn Write, format: Format, with_word: bool, with_params: bool) -> io::Result<Self> {
        if format == Format::Csv {
            let mut header = String::from("a,b,c");
            if with_word {
                header.push_str(",seed,word,twin");
            }
            if with_params {
                header.push_str(",m,n,variant");
            }
            writeln!(out, "{header}")?;
        }
        Ok(Self { out, format, with_word, with_params })
    }

    pub fn write(&mut self, r: &Record<'_>) -> io::Result<()> {
        let line = match self.format {
            Format::Jsonl => self.jsonl(r),
            Format::Csv => self.csv(r),
        };
        writeln!(self.out, "{line}")
    }

    fn jsonl(&self, r: &Record<'_>) -> String {
        let t = r.triple;
        let mut s = format!("{{\"a\":{},\"b\":{},\"c\":{}", t.a(), t.b(), t.c());
        if self.with_word {
            match r.word {
                Some(w) => {
                    let letters: Vec<String> = w.letters.iter().map(|l| l.to_string()).collect();
                    s.push_str(&format!(
                        ",\"seed\":\"{}\",\"word\":[{}],\"twin\":{}",
                        w.seed,
                        letters.join(","),
                        w.twin
                    ));
                }
                None => s.push_str(",\"seed\":null,\"word\":null,\"twin\":null"),
            }
        }
        if self.with_params {
            match r.params {
                Some(p) => {
                    s.push_str(&format!(",\"m\":{},\"n\":{}", p.m(), p.n()));
                    match r.variant() {
                        Some(v) => s.push_str(&format!(",\"variant\":\"{v}\"")),
                        None => s.push_str(",\"variant\":null"),
                    }
                }
                None => s.push_str(",\"m\":null,\"n\":null,\"variant\":null"),
            }
        }
        s.push('}');
        s
    }

    fn csv(&self, r: &Record<'_>) -> String {
        let t = r.triple;
        let mut s = format!("{},{},{}", t.a(), t.b(), t.c());
        if self.with_word {
            match r.word {
                Some(w) => s.push_str(&format!(",{},{},{}", w.seed, w.letters_string(), w.twin)),
                None => s.push_str(",,,"),
            }
        }
        if self.with_params {
            match r.params {
                Some(p) => s.push_str(&format!(",{},{},{}", p.m(), p.n(), r.variant().unwrap_or(""))),
                None => s.push_str(",,,"),
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use eisenstein::{validate_params, SeedId};

    fn render(format: Format, with_word: bool, with_params: bool, r: &Record<'_>) -> String {
        let mut buf = Vec::new();
        let mut w = RecordWriter::new(&mut buf, format, with_word, with_params).unwrap();
        w.write(r).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn jsonl_layout() {
        let t = Triple::new(19, 16, 5).unwrap();
        let word = DerivationWord::new(SeedId::S1, vec![5], false);
        let p = validate_params(3, 2).unwrap();
        let r = Record::new(Family::OneTwenty, t, Some(&word), Some(&p));
        assert_eq!(render(Format::Jsonl, false, false, &r), "{\"a\":19,\"b\":16,\"c\":5}\n");
        assert_eq!(
            render(Format::Jsonl, true, false, &r),
            "{\"a\":19,\"b\":16,\"c\":5,\"seed\":\"S1\",\"word\":[5],\"twin\":false}\n"
        );
        assert_eq!(
            render(Format::Jsonl, true, true, &r),
            "{\"a\":19,\"b\":16,\"c\":5,\"seed\":\"S1\",\"word\":[5],\"twin\":false,\"m\":3,\"n\":2,\"variant\":null}\n"
        );
        let parsed: serde_json::Value =
            serde_json::from_str(render(Format::Jsonl, true, true, &r).trim()).unwrap();
        assert_eq!(parsed["word"], serde_json::json!([5]));
    }

    #[test]
    fn csv_layout() {
        let t = Triple::new(1, 1, 1).unwrap();
        let r = Record::new(Family::Sixty, t, None, None);
        assert_eq!(render(Format::Csv, false, false, &r), "a,b,c\n1,1,1\n");
        assert_eq!(
            render(Format::Csv, true, true, &r),
            "a,b,c,seed,word,twin,m,n,variant\n1,1,1,,,,,,\n"
        );
        let word = DerivationWord::new(SeedId::S2, vec![1, 3], true);
        let p = validate_params(3, 1).unwrap().with_variant(eisenstein::Variant::Minus);
        let r = Record::new(Family::Sixty, Triple::new(13, 15, 8).unwrap(), Some(&word), Some(&p));
        assert!(render(Format::Csv, true, true, &r).ends_with("13,15,8,S2,13,true,3,1,MINUS\n"));
    }
}
