//! Single Classification Ripple Down Rules trees.
//!
//! Every node holds an `if condition then conclusion` rule and has at most
//! two children: an *except* child, visited when the node's condition holds,
//! and an *if-not* child, visited when it does not. A case descends from the
//! root until the required child is missing; the answer is the conclusion of
//! the last node on that path whose condition held.
//!
//! Model files hold one node per line. Leading tabs give the node's
//! exception depth. The first line nested under a parent is its except
//! child; later lines at the same depth under that parent extend the
//! if-not chain hanging off the except child.
//!
//! ```text
//! COND TRUE : CONCLUSION IDENTITY #0
//! 	COND t_0=="I" : CONCLUSION I #1
//! 		COND s_0=="thu" && s_p1=="nhập" : CONCLUSION B #3
//! 	COND t_0=="B" : CONCLUSION B #2
//! ```

#![allow(clippy::tabs_in_doc_comments)]

use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;

use crate::context::{ContextTuple, Field};
use crate::corpus::SegTag;
use crate::error::{Error, Result};

/// Conjunction of field equality tests, at most one per field, kept in field order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Condition {
    clauses: Vec<(Field, String)>,
}

impl Condition {
    /// The always-true condition.
    pub fn always() -> Condition {
        Condition::default()
    }

    /// Panics if two clauses test the same field.
    pub fn new(clauses: Vec<(Field, String)>) -> Condition {
        Condition::try_new(clauses).expect("at most one clause per field")
    }

    pub fn try_new(mut clauses: Vec<(Field, String)>) -> Option<Condition> {
        clauses.sort_by_key(|(f, _)| *f);
        if clauses.windows(2).any(|w| w[0].0 == w[1].0) {
            return None;
        }
        Some(Condition { clauses })
    }

    pub fn clauses(&self) -> &[(Field, String)] {
        &self.clauses
    }

    pub fn is_always(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }
}

fn write_quoted(out: &mut impl fmt::Write, v: &str) -> fmt::Result {
    out.write_char('"')?;
    for c in v.chars() {
        if c == '"' || c == '\\' {
            out.write_char('\\')?;
        }
        out.write_char(c)?;
    }
    out.write_char('"')
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return f.write_str("TRUE");
        }
        for (k, (field, value)) in self.clauses.iter().enumerate() {
            if k > 0 {
                f.write_str(" && ")?;
            }
            write!(f, "{field}==")?;
            write_quoted(f, value)?;
        }
        Ok(())
    }
}

/// True iff every clause's field of `t` equals the clause value.
pub fn satisfies(t: &ContextTuple, c: &Condition) -> bool {
    c.clauses.iter().all(|(f, v)| t.get(*f) == v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Conclusion {
    Tag(SegTag),
    /// Return the tuple's own centre tag. Only used by the root.
    Identity,
}

impl Conclusion {
    pub fn apply(self, t: &ContextTuple) -> SegTag {
        match self {
            Conclusion::Tag(tag) => tag,
            Conclusion::Identity => t.t0(),
        }
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::Tag(t) => f.write_str(t.as_str()),
            Conclusion::Identity => f.write_str("IDENTITY"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    condition: Condition,
    conclusion: Conclusion,
}

impl Rule {
    pub fn new(condition: Condition, conclusion: Conclusion) -> Rule {
        Rule {
            condition,
            conclusion,
        }
    }

    pub fn condition(&self) -> &Condition {
        &self.condition
    }

    pub fn conclusion(&self) -> Conclusion {
        self.conclusion
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {}", self.condition, self.conclusion)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub id: usize,
    pub rule: Rule,
    pub except_child: Option<usize>,
    pub ifnot_child: Option<usize>,
    /// Exception depth: except children sit one level below their parent,
    /// if-not children at the same level as their predecessor.
    pub depth: usize,
    /// The node whose exception chain this node belongs to (`None` for the root).
    pub attached_at: Option<usize>,
}

/// Result of rippling one case down the tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub tag: SegTag,
    pub firing_node: usize,
    pub path: Vec<usize>,
}

/// A tree in an arena; node ids equal arena indices and creation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScrdrTree {
    nodes: Vec<Node>,
}

impl ScrdrTree {
    /// A root-only tree with the always-true default rule.
    pub fn with_default(conclusion: Conclusion) -> ScrdrTree {
        ScrdrTree {
            nodes: vec![Node {
                id: 0,
                rule: Rule::new(Condition::always(), conclusion),
                except_child: None,
                ifnot_child: None,
                depth: 0,
                attached_at: None,
            }],
        }
    }

    /// Root `TRUE => IDENTITY`, node 1 `t_0=="I" => I` as its except child,
    /// node 2 `t_0=="B" => B` as the if-not child of node 1.
    pub fn initialized() -> ScrdrTree {
        let mut tree = ScrdrTree::with_default(Conclusion::Identity);
        for tag in [SegTag::I, SegTag::B] {
            let rule = Rule::new(
                Condition::new(vec![(Field::Tag0, tag.as_str().to_string())]),
                Conclusion::Tag(tag),
            );
            tree.attach_exception(0, rule)
                .expect("root exists and conclusion is a tag");
        }
        tree
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, id: usize) -> Option<&Node> {
        self.nodes.get(id)
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn root(&self) -> &Node {
        &self.nodes[0]
    }

    /// Id of the last satisfied node on the evaluation path.
    pub fn fire(&self, t: &ContextTuple) -> usize {
        self.fire_from(0, t)
    }

    /// Continue an evaluation at `start`, assuming `start` is satisfied.
    pub(crate) fn fire_from(&self, start: usize, t: &ContextTuple) -> usize {
        let mut fired = start;
        let mut next = self.nodes[start].except_child;
        while let Some(id) = next {
            let node = &self.nodes[id];
            if satisfies(t, &node.rule.condition) {
                fired = id;
                next = node.except_child;
            } else {
                next = node.ifnot_child;
            }
        }
        fired
    }

    pub fn classify(&self, t: &ContextTuple) -> SegTag {
        self.nodes[self.fire(t)].rule.conclusion.apply(t)
    }

    pub fn evaluate(&self, t: &ContextTuple) -> Evaluation {
        let mut path = Vec::new();
        let mut fired = 0;
        let mut next = Some(0);
        while let Some(id) = next {
            path.push(id);
            let node = &self.nodes[id];
            if satisfies(t, &node.rule.condition) {
                fired = id;
                next = node.except_child;
            } else {
                next = node.ifnot_child;
            }
        }
        Evaluation {
            tag: self.nodes[fired].rule.conclusion.apply(t),
            firing_node: fired,
            path,
        }
    }

    /// Last node of `at`'s exception chain (the except child followed by its
    /// if-not links), or `None` if `at` has no except child.
    pub fn chain_end(&self, at: usize) -> Option<usize> {
        let mut cur = self.nodes.get(at)?.except_child?;
        while let Some(next) = self.nodes[cur].ifnot_child {
            cur = next;
        }
        Some(cur)
    }

    /// Attach an exception rule for cases firing at `at`. Returns the new node id.
    pub fn attach_exception(&mut self, at: usize, rule: Rule) -> Result<usize> {
        if at >= self.nodes.len() {
            return Err(Error::InvalidNode(at));
        }
        if rule.conclusion == Conclusion::Identity {
            return Err(Error::Config(
                "IDENTITY conclusion is reserved for the root".to_string(),
            ));
        }
        let id = self.nodes.len();
        let depth = self.nodes[at].depth + 1;
        match self.chain_end(at) {
            None => self.nodes[at].except_child = Some(id),
            Some(end) => self.nodes[end].ifnot_child = Some(id),
        }
        self.nodes.push(Node {
            id,
            rule,
            except_child: None,
            ifnot_child: None,
            depth,
            attached_at: Some(at),
        });
        Ok(id)
    }

    /// Node ids in model-file order.
    fn preorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![0usize];
        while let Some(id) = stack.pop() {
            order.push(id);
            let mut chain = Vec::new();
            let mut next = self.nodes[id].except_child;
            while let Some(c) = next {
                chain.push(c);
                next = self.nodes[c].ifnot_child;
            }
            stack.extend(chain.into_iter().rev());
        }
        order
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for id in self.preorder() {
            let node = &self.nodes[id];
            for _ in 0..node.depth {
                out.push('\t');
            }
            // fmt::Write on String is infallible
            let _ = writeln!(
                out,
                "COND {} : CONCLUSION {} #{}",
                node.rule.condition, node.rule.conclusion, id
            );
        }
        out
    }

    pub fn deserialize(text: &str) -> Result<ScrdrTree> {
        parse_model(text)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.serialize()).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<ScrdrTree> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        parse_model(&text)
    }
}

struct ParsedLine {
    depth: usize,
    rule: Rule,
    id: Option<usize>,
}

struct Cursor<'a> {
    rest: &'a str,
}

impl<'a> Cursor<'a> {
    fn eat(&mut self, lit: &str) -> bool {
        match self.rest.strip_prefix(lit) {
            Some(r) => {
                self.rest = r;
                true
            }
            None => false,
        }
    }

    fn quoted(&mut self) -> Option<String> {
        let mut chars = self.rest.strip_prefix('"')?.char_indices();
        let mut value = String::new();
        while let Some((i, c)) = chars.next() {
            match c {
                '\\' => value.push(chars.next()?.1),
                '"' => {
                    self.rest = &self.rest[1 + i + 1..];
                    return Some(value);
                }
                _ => value.push(c),
            }
        }
        None
    }
}

fn parse_line(raw: &str) -> std::result::Result<ParsedLine, String> {
    let depth = raw.chars().take_while(|&c| c == '\t').count();
    let mut cur = Cursor { rest: &raw[depth..] };
    if !cur.eat("COND ") {
        return Err("expected `COND `".to_string());
    }
    let condition = if cur.eat("TRUE") {
        Condition::always()
    } else {
        let mut clauses = Vec::new();
        loop {
            let end = cur.rest.find("==").ok_or("expected `==`")?;
            let name = &cur.rest[..end];
            let field = Field::from_name(name).ok_or_else(|| format!("unknown field `{name}`"))?;
            cur.rest = &cur.rest[end + 2..];
            let value = cur.quoted().ok_or("unterminated quoted value")?;
            if field.is_tag() && !matches!(value.as_str(), "" | "B" | "I") {
                return Err(format!("invalid tag value `{value}` for {name}"));
            }
            clauses.push((field, value));
            if !cur.eat(" && ") {
                break;
            }
        }
        Condition::try_new(clauses).ok_or("duplicate field in condition")?
    };
    if !cur.eat(" : CONCLUSION ") {
        return Err("expected ` : CONCLUSION `".to_string());
    }
    let conclusion = if cur.eat("IDENTITY") {
        Conclusion::Identity
    } else if cur.eat("B") {
        Conclusion::Tag(SegTag::B)
    } else if cur.eat("I") {
        Conclusion::Tag(SegTag::I)
    } else {
        return Err("expected B, I or IDENTITY".to_string());
    };
    let id = if cur.eat(" #") {
        let digits = cur.rest.trim_end();
        cur.rest = "";
        Some(
            digits
                .parse::<usize>()
                .map_err(|_| format!("invalid node id `{digits}`"))?,
        )
    } else {
        None
    };
    if !cur.rest.trim_end().is_empty() {
        return Err(format!("trailing text `{}`", cur.rest));
    }
    Ok(ParsedLine {
        depth,
        rule: Rule::new(condition, conclusion),
        id,
    })
}

fn parse_model(text: &str) -> Result<ScrdrTree> {
    let err = |line: usize, reason: String| Error::ModelParse { line, reason };

    struct Proto {
        rule: Rule,
        id: Option<usize>,
        depth: usize,
        attached_at: Option<usize>,
        except_child: Option<usize>,
        ifnot_child: Option<usize>,
        chain_tail: Option<usize>,
    }
    // Indices below are positions in file order.
    let mut protos: Vec<Proto> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let lineno = k + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let line = parse_line(raw).map_err(|r| err(lineno, r))?;
        let pos = protos.len();
        let attached_at = if line.depth == 0 {
            if !protos.is_empty() {
                return Err(err(lineno, "second root node".to_string()));
            }
            if !line.rule.condition.is_always() {
                return Err(err(lineno, "root condition must be TRUE".to_string()));
            }
            None
        } else {
            if protos.is_empty() {
                return Err(err(lineno, "first line must be the root".to_string()));
            }
            if line.depth > stack.len() {
                return Err(err(
                    lineno,
                    format!("indentation jumps to depth {}", line.depth),
                ));
            }
            if line.rule.conclusion == Conclusion::Identity {
                return Err(err(lineno, "IDENTITY is only allowed at the root".to_string()));
            }
            if line.rule.condition.is_always() {
                return Err(err(lineno, "TRUE is only allowed at the root".to_string()));
            }
            let parent = stack[line.depth - 1];
            match protos[parent].chain_tail {
                None => protos[parent].except_child = Some(pos),
                Some(tail) => protos[tail].ifnot_child = Some(pos),
            }
            protos[parent].chain_tail = Some(pos);
            Some(parent)
        };
        stack.truncate(line.depth);
        stack.push(pos);
        protos.push(Proto {
            rule: line.rule,
            id: line.id,
            depth: line.depth,
            attached_at,
            except_child: None,
            ifnot_child: None,
            chain_tail: None,
        });
    }
    if protos.is_empty() {
        return Err(err(1, "empty model".to_string()));
    }

    // Map file positions to node ids.
    let with_ids = protos.iter().filter(|p| p.id.is_some()).count();
    let ids: Vec<usize> = if with_ids == 0 {
        (0..protos.len()).collect()
    } else if with_ids == protos.len() {
        protos.iter().map(|p| p.id.unwrap()).collect()
    } else {
        return Err(err(1, "node ids present on some lines only".to_string()));
    };
    let mut seen = vec![false; ids.len()];
    for &id in &ids {
        if id >= ids.len() || std::mem::replace(&mut seen[id], true) {
            return Err(err(1, format!("node ids are not a permutation (id {id})")));
        }
    }
    if ids[0] != 0 {
        return Err(err(1, "root must have id 0".to_string()));
    }

    let mut nodes: Vec<Option<Node>> = vec![None; ids.len()];
    for (pos, p) in protos.into_iter().enumerate() {
        let node = Node {
            id: ids[pos],
            rule: p.rule,
            except_child: p.except_child.map(|c| ids[c]),
            ifnot_child: p.ifnot_child.map(|c| ids[c]),
            depth: p.depth,
            attached_at: p.attached_at.map(|a| ids[a]),
        };
        // Creation order: children and chain successors are newer.
        for child in [node.except_child, node.ifnot_child].into_iter().flatten() {
            if child <= node.id {
                return Err(err(1, format!("node {child} is older than its predecessor {}", node.id)));
            }
        }
        let id = node.id;
        nodes[id] = Some(node);
    }
    Ok(ScrdrTree {
        nodes: nodes.into_iter().map(|n| n.expect("ids form a permutation")).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tup(v: [&str; 10]) -> ContextTuple {
        ContextTuple::from_values(v).unwrap()
    }

    fn cond(clauses: &[(Field, &str)]) -> Condition {
        Condition::new(clauses.iter().map(|(f, v)| (*f, v.to_string())).collect())
    }

    fn rule(clauses: &[(Field, &str)], tag: SegTag) -> Rule {
        Rule::new(cond(clauses), Conclusion::Tag(tag))
    }

    #[test]
    fn satisfies_examples() {
        let row2 = tup(["", "", "thuế", "B", "thu", "B", "nhập", "I", "cá", "B"]);
        let row3 = tup(["thuế", "B", "thu", "B", "nhập", "I", "cá", "B", "nhân", "I"]);
        assert!(satisfies(&row2, &cond(&[(Field::SylM1, "thuế"), (Field::SylP1, "nhập")])));
        assert!(satisfies(&row3, &Condition::always()));
        assert!(!satisfies(&row3, &cond(&[(Field::SylM1, "thuế")])));
        assert!(satisfies(&row2, &cond(&[(Field::TagM2, "")])));
    }

    #[test]
    fn duplicate_fields_are_rejected() {
        assert!(Condition::try_new(vec![
            (Field::Syl0, "a".into()),
            (Field::Syl0, "b".into())
        ])
        .is_none());
    }

    #[test]
    fn initialized_tree_reproduces_t0() {
        let tree = ScrdrTree::initialized();
        assert_eq!(tree.node_count(), 3);
        let b = tup(["", "", "", "", "x", "B", "", "", "", ""]);
        let i = tup(["", "", "a", "B", "x", "I", "", "", "", ""]);
        let eb = tree.evaluate(&b);
        assert_eq!((eb.tag, eb.firing_node, eb.path), (SegTag::B, 2, vec![0, 1, 2]));
        let ei = tree.evaluate(&i);
        assert_eq!((ei.tag, ei.firing_node, ei.path), (SegTag::I, 1, vec![0, 1]));
    }

    #[test]
    fn if_not_branch_hand_trace() {
        let mut tree = ScrdrTree::with_default(Conclusion::Identity);
        let n1 = tree.attach_exception(0, rule(&[(Field::Syl0, "thu")], SegTag::I)).unwrap();
        let n2 = tree.attach_exception(0, rule(&[(Field::Tag0, "B")], SegTag::B)).unwrap();
        assert_eq!(tree.node(n1).unwrap().ifnot_child, Some(n2));
        let t = tup(["", "", "", "", "xin", "B", "", "", "", ""]);
        let e = tree.evaluate(&t);
        assert_eq!((e.tag, e.firing_node, e.path), (SegTag::B, 2, vec![0, 1, 2]));
    }

    /// The POS-tagging walk-through: nodes 0, 1 and 3 fire, 6 and 7 do not.
    #[test]
    fn last_satisfied_rule_wins() {
        let mut tree = ScrdrTree::with_default(Conclusion::Identity);
        let yes = |f: Field| rule(&[(f, "")], SegTag::B);
        let no = |f: Field| rule(&[(f, "zz")], SegTag::I);
        let n1 = tree.attach_exception(0, yes(Field::SylM2)).unwrap();
        let n2 = tree.attach_exception(0, no(Field::SylM1)).unwrap();
        let n3 = tree.attach_exception(n1, rule(&[(Field::TagM1, "")], SegTag::I)).unwrap();
        let n4 = tree.attach_exception(n2, no(Field::SylP1)).unwrap();
        let n5 = tree.attach_exception(n1, no(Field::SylP2)).unwrap();
        let n6 = tree.attach_exception(n3, no(Field::Syl0)).unwrap();
        let n7 = tree.attach_exception(n3, no(Field::SylM2)).unwrap();
        assert_eq!((n3, n4, n5, n6, n7), (3, 4, 5, 6, 7));
        let t = tup(["", "", "", "", "x", "B", "", "", "", ""]);
        let e = tree.evaluate(&t);
        assert_eq!(e.path, vec![0, 1, 3, 6, 7]);
        assert_eq!((e.firing_node, e.tag), (3, SegTag::I));
    }

    #[test]
    fn attachment_follows_exception_chain() {
        let mut tree = ScrdrTree::initialized();
        let a = tree.attach_exception(2, rule(&[(Field::Syl0, "a")], SegTag::I)).unwrap();
        assert_eq!(tree.node(2).unwrap().except_child, Some(a));
        let b = tree.attach_exception(2, rule(&[(Field::Syl0, "b")], SegTag::I)).unwrap();
        assert_eq!(tree.node(a).unwrap().ifnot_child, Some(b));
        let c = tree.attach_exception(2, rule(&[(Field::Syl0, "c")], SegTag::I)).unwrap();
        assert_eq!(tree.node(b).unwrap().ifnot_child, Some(c));
        assert_eq!(tree.node_count(), 6);
        assert_eq!(tree.node(c).unwrap().attached_at, Some(2));
        assert_eq!(tree.node(c).unwrap().depth, 2);

        assert!(matches!(
            tree.attach_exception(99, rule(&[(Field::Syl0, "x")], SegTag::B)),
            Err(Error::InvalidNode(99))
        ));
        assert!(tree
            .attach_exception(1, Rule::new(cond(&[(Field::Syl0, "x")]), Conclusion::Identity))
            .is_err());
    }

    #[test]
    fn serialization_round_trip() {
        let tree = ScrdrTree::initialized();
        let text = tree.serialize();
        assert_eq!(text.lines().count(), 3);
        assert_eq!(
            text,
            "COND TRUE : CONCLUSION IDENTITY #0\n\tCOND t_0==\"I\" : CONCLUSION I #1\n\tCOND t_0==\"B\" : CONCLUSION B #2\n"
        );
        assert_eq!(ScrdrTree::deserialize(&text).unwrap(), tree);

        let mut tree = ScrdrTree::initialized();
        let n3 = tree.attach_exception(1, rule(&[(Field::Syl0, "q\"uote")], SegTag::B)).unwrap();
        tree.attach_exception(2, rule(&[(Field::Syl0, "back\\slash"), (Field::TagP1, "")], SegTag::I)).unwrap();
        tree.attach_exception(n3, rule(&[(Field::SylP2, "")], SegTag::I)).unwrap();
        tree.attach_exception(1, rule(&[(Field::SylM1, "x y")], SegTag::B)).unwrap();
        let text = tree.serialize();
        assert_eq!(text.lines().count(), tree.node_count());
        assert_eq!(ScrdrTree::deserialize(&text).unwrap(), tree);
    }

    #[test]
    fn ids_default_to_file_order() {
        let text = "COND TRUE : CONCLUSION IDENTITY\n\tCOND t_0==\"I\" : CONCLUSION I\n\tCOND t_0==\"B\" : CONCLUSION B\n";
        assert_eq!(ScrdrTree::deserialize(text).unwrap(), ScrdrTree::initialized());
    }

    #[test]
    fn malformed_models_report_lines() {
        let cases = [
            ("COND TRUE : CONCLUSION IDENTITY\n\t\tCOND t_0==\"I\" : CONCLUSION I\n", 2),
            ("\tCOND t_0==\"I\" : CONCLUSION I\n", 1),
            ("COND TRUE : CONCLUSION IDENTITY\n\tCOND t_9==\"I\" : CONCLUSION I\n", 2),
            ("COND TRUE : CONCLUSION IDENTITY\n\tCOND t_0==\"X\" : CONCLUSION I\n", 2),
            ("COND TRUE : CONCLUSION IDENTITY\n\tCOND s_0==\"a : CONCLUSION I\n", 2),
            ("COND TRUE : CONCLUSION IDENTITY\n\tCOND s_0==\"a\" : CONCLUSION IDENTITY\n", 2),
            ("COND TRUE : CONCLUSION IDENTITY\nCOND TRUE : CONCLUSION B\n", 2),
            ("COND s_0==\"a\" : CONCLUSION B\n", 1),
            ("COND TRUE : CONCLUSION Q\n", 1),
        ];
        for (text, line) in cases {
            match ScrdrTree::deserialize(text) {
                Err(Error::ModelParse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} => {other:?}"),
            }
        }
        assert!(ScrdrTree::deserialize("").is_err());
        assert!(ScrdrTree::deserialize("COND TRUE : CONCLUSION IDENTITY #1\n").is_err());
    }
}
