//! Permutation action files for the `orbital` command.
//!
//! One generator per line, `<index>: [inv] <image of 0> <image of 1> ...`.
//! Lines marked `inv` are involutions; the others are free generators.
//! Indices run 0, 1, 2, ... and number free generators and involutions
//! separately, so `0: 1 0` and `0: inv 1 0` may appear together.

use schreier_core::PermutationAction;

use crate::error::ParseError;
use crate::heg::{content_lines, parse_index};

pub fn parse_action(text: &str) -> Result<PermutationAction, ParseError> {
    let mut free_gens = Vec::new();
    let mut inv_gens: Vec<Vec<usize>> = Vec::new();
    let mut set_size = None;
    for (line, record) in content_lines(text) {
        let (index, rest) = record
            .split_once(':')
            .ok_or_else(|| ParseError::new(line, "expected `<index>: <images>`"))?;
        let index = parse_index(line, Some(index.trim()), "generator index")?;
        let mut tokens = rest.split_whitespace().peekable();
        let involution = tokens.peek() == Some(&"inv");
        if involution {
            tokens.next();
        }
        let images: Vec<usize> = tokens
            .map(|t| parse_index(line, Some(t), "image"))
            .collect::<Result<_, _>>()?;
        match set_size {
            None => set_size = Some(images.len()),
            Some(n) if n != images.len() => {
                return Err(ParseError::new(
                    line,
                    format!("expected {n} images, found {}", images.len()),
                ))
            }
            Some(_) => {}
        }
        let gens = if involution {
            &mut inv_gens
        } else {
            &mut free_gens
        };
        if index != gens.len() {
            return Err(ParseError::new(
                line,
                format!("expected generator index {}", gens.len()),
            ));
        }
        gens.push(images);
    }
    let set_size = set_size.ok_or_else(|| ParseError::new(0, "no generators"))?;
    let action = PermutationAction {
        set_size,
        free_gens,
        inv_gens,
    };
    action
        .validate()
        .map_err(|e| ParseError::new(0, e.to_string()))?;
    Ok(action)
}

pub fn serialize_action(a: &PermutationAction) -> String {
    let mut out = String::new();
    let row = |out: &mut String, i: usize, flag: &str, p: &[usize]| {
        out.push_str(&format!("{i}:{flag}"));
        for x in p {
            out.push_str(&format!(" {x}"));
        }
        out.push('\n');
    };
    for (i, p) in a.free_gens.iter().enumerate() {
        row(&mut out, i, "", p);
    }
    for (j, p) in a.inv_gens.iter().enumerate() {
        row(&mut out, j, " inv", p);
    }
    out
}
