use distinctiveness::{BaselineSpec, MetricId};

/// One item of a `--metrics` list.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Token {
    One(Selected),
    AllDc,
    AllBaselines,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Selected {
    Dc(MetricId),
    Baseline(BaselineSpec),
}

pub fn parse_token(s: &str) -> Result<Token, String> {
    match s.trim() {
        "dc" | "all-dc" => Ok(Token::AllDc),
        "baselines" => Ok(Token::AllBaselines),
        t => t
            .parse::<MetricId>()
            .map(|m| Token::One(Selected::Dc(m)))
            .or_else(|_| t.parse::<BaselineSpec>().map(|b| Token::One(Selected::Baseline(b))))
            .map_err(|_| format!("unknown metric `{t}`")),
    }
}

/// Flattens tokens in order, dropping repeats.
pub fn expand(tokens: &[Token]) -> Vec<Selected> {
    let mut out: Vec<Selected> = Vec::new();
    let mut push = |s: Selected| {
        if !out.contains(&s) {
            out.push(s);
        }
    };
    for t in tokens {
        match *t {
            Token::One(s) => push(s),
            Token::AllDc => MetricId::ALL.iter().for_each(|&m| push(Selected::Dc(m))),
            Token::AllBaselines => BaselineSpec::all().into_iter().for_each(|b| push(Selected::Baseline(b))),
        }
    }
    out
}
