//! Line breaking for printed target terms.
//!
//! The printer emits one line; here it is split into parenthesised groups
//! and re-flowed so that lines stay within a width where possible. Only
//! whitespace changes, so the result still reads back to the same term.

enum Item {
    Word(String),
    Group(Vec<Item>),
}

fn parse(s: &str) -> Vec<Item> {
    let mut stack: Vec<Vec<Item>> = vec![Vec::new()];
    let mut word = String::new();
    let flush = |word: &mut String, stack: &mut Vec<Vec<Item>>| {
        if !word.is_empty() {
            stack.last_mut().unwrap().push(Item::Word(std::mem::take(word)));
        }
    };
    for c in s.chars() {
        match c {
            '(' => {
                flush(&mut word, &mut stack);
                stack.push(Vec::new());
            }
            ')' => {
                flush(&mut word, &mut stack);
                let g = stack.pop().unwrap();
                match stack.last_mut() {
                    Some(top) => top.push(Item::Group(g)),
                    // Unbalanced input: keep it verbatim.
                    None => return vec![Item::Word(s.to_string())],
                }
            }
            c if c.is_whitespace() => flush(&mut word, &mut stack),
            c => word.push(c),
        }
    }
    flush(&mut word, &mut stack);
    if stack.len() != 1 {
        return vec![Item::Word(s.to_string())];
    }
    stack.pop().unwrap()
}

fn flat_len(it: &Item) -> usize {
    match it {
        Item::Word(w) => w.chars().count(),
        Item::Group(g) => 2 + seq_len(g),
    }
}

fn seq_len(items: &[Item]) -> usize {
    items.iter().map(flat_len).sum::<usize>() + items.len().saturating_sub(1)
}

fn flat(it: &Item, out: &mut String) {
    match it {
        Item::Word(w) => out.push_str(w),
        Item::Group(g) => {
            out.push('(');
            flat_seq(g, out);
            out.push(')');
        }
    }
}

fn flat_seq(items: &[Item], out: &mut String) {
    for (i, it) in items.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        flat(it, out);
    }
}

struct Writer {
    out: String,
    col: usize,
    width: usize,
}

impl Writer {
    fn push(&mut self, s: &str) {
        self.out.push_str(s);
        self.col += s.chars().count();
    }

    fn newline(&mut self, indent: usize) {
        while self.out.ends_with(' ') {
            self.out.pop();
        }
        self.out.push('\n');
        self.out.push_str(&" ".repeat(indent));
        self.col = indent;
    }

    /// Writes one item; `tail` counts closing parens that will follow it.
    fn item(&mut self, it: &Item, indent: usize, tail: usize) {
        if self.col + flat_len(it) + tail <= self.width {
            let mut s = String::new();
            flat(it, &mut s);
            self.push(&s);
            return;
        }
        match it {
            Item::Word(w) => self.push(w),
            Item::Group(g) => {
                self.push("(");
                self.seq(g, indent + 2, tail + 1);
                self.push(")");
            }
        }
    }

    /// Fills items onto lines, breaking before any item that does not fit.
    fn seq(&mut self, items: &[Item], indent: usize, tail: usize) {
        if self.col + seq_len(items) + tail <= self.width {
            let mut s = String::new();
            flat_seq(items, &mut s);
            self.push(&s);
            return;
        }
        let last = items.len().saturating_sub(1);
        for (i, it) in items.iter().enumerate() {
            let t = if i == last { tail } else { 0 };
            if i > 0 {
                if self.col + 1 + flat_len(it) + t <= self.width || self.col <= indent {
                    self.push(" ");
                } else {
                    self.newline(indent);
                }
            }
            self.item(it, indent, t);
        }
    }
}

/// Re-flows `s`, which starts at column `col`; continuation lines are
/// indented by `indent`.
pub fn reflow(s: &str, col: usize, indent: usize, width: usize) -> String {
    let items = parse(s);
    let mut w = Writer { out: String::new(), col, width };
    w.seq(&items, indent, 0);
    w.out
}
