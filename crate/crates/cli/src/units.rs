use anyhow::{anyhow, bail, Context, Result};
use cuspidal::CycloNumber;

/// Parses `1`, `-1`, `i`, `-i` or `e(J/M)` meaning `exp(2πi J/M)`.
pub fn parse_unit(text: &str) -> Result<CycloNumber> {
    let t = text.trim();
    let (j, m) = match t {
        "1" => (0, 1),
        "-1" => (1, 2),
        "i" => (1, 4),
        "-i" => (3, 4),
        _ => {
            let inner = t
                .strip_prefix("e(")
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| anyhow!("unit {t:?} is not 1, -1, i, -i or e(J/M)"))?;
            let (a, b) = inner
                .split_once('/')
                .ok_or_else(|| anyhow!("unit {t:?} needs the form e(J/M)"))?;
            let j: i64 = a.trim().parse().with_context(|| format!("numerator of {t:?}"))?;
            let m: u64 = b.trim().parse().with_context(|| format!("denominator of {t:?}"))?;
            if m == 0 {
                bail!("unit {t:?} has zero denominator");
            }
            (j, m)
        }
    };
    Ok(CycloNumber::root_of_unity(m, j)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        let i = CycloNumber::root_of_unity(4, 1).unwrap();
        assert_eq!(parse_unit("i").unwrap(), i);
        assert_eq!(parse_unit("e(1/4)").unwrap(), i);
        assert_eq!(parse_unit("e(-3/4)").unwrap(), i);
        assert_eq!(parse_unit("-1").unwrap(), -CycloNumber::one());
        assert_eq!(parse_unit("-i").unwrap(), i.conj());
        assert!(parse_unit("1").unwrap().is_one());
        for bad in ["2", "e(1/0)", "e(1,2)", "e(x/3)", ""] {
            assert!(parse_unit(bad).is_err(), "{bad}");
        }
    }
}
