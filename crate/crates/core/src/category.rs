//! Finitely presented strict symmetric monoidal categories enriched in
//! vector spaces.
//!
//! Objects form a finite monoid under `⋄` with literal associativity and unit.
//! Every hom space carries a named basis; composition, `⋄` on morphisms and
//! the symmetry are given by coordinate tables and extended bilinearly.

use std::collections::HashMap;

use crate::error::{Error, Result, Violation};
use crate::format::{parse_hom_key, parse_pair, CategoryFile, CoeffMap, FieldSpec};
use crate::linalg::{axpy, is_zero_vector, unit_vector, zero_vector, Vector};
use crate::scalar::{Field, Scalar};

pub type ObjId = usize;

/// A basis morphism, addressed globally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMorphism {
    pub name: String,
    pub src: ObjId,
    pub tgt: ObjId,
    /// Position in `hom(src, tgt)`.
    pub index: usize,
}

/// A morphism given by coordinates in the basis of `hom(src, tgt)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorExpr {
    pub src: ObjId,
    pub tgt: ObjId,
    pub coords: Vector,
}

impl MorExpr {
    pub fn scale(&self, s: &Scalar) -> MorExpr {
        MorExpr {
            src: self.src,
            tgt: self.tgt,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &MorExpr) -> Result<MorExpr> {
        if (self.src, self.tgt) != (other.src, other.tgt) {
            return Err(Error::Incompatible("adding morphisms of different hom spaces".into()));
        }
        Ok(MorExpr {
            src: self.src,
            tgt: self.tgt,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coords)
    }
}

#[derive(Clone, Debug)]
pub struct CategoryPresentation {
    field: Field,
    objects: Vec<String>,
    unit: ObjId,
    tensor: Vec<Vec<ObjId>>,
    /// Global basis indices per `(src, tgt)`.
    hom: Vec<Vec<Vec<usize>>>,
    basis: Vec<BasisMorphism>,
    by_name: HashMap<String, usize>,
    identity: Vec<Vector>,
    /// `compose[g][f]` for composable basis pairs.
    compose: Vec<Vec<Option<Vector>>>,
    tensor_mor: Vec<Vec<Vector>>,
    symmetry: Vec<Vec<Vector>>,
}

impl CategoryPresentation {
    /// Builds and validates a presentation from its file form.
    pub fn from_file(raw: &CategoryFile) -> Result<Self> {
        let p = Self::assemble(raw)?;
        let violations = p.validate();
        if violations.is_empty() {
            Ok(p)
        } else {
            Err(Error::Validation(violations))
        }
    }

    /// Parses the tables without checking axioms; shape and lookup problems
    /// are still reported.
    pub fn assemble(raw: &CategoryFile) -> Result<Self> {
        let field = raw.field.to_field()?;
        let objects = raw.objects.clone();
        let obj_index: HashMap<String, ObjId> =
            objects.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
        if obj_index.len() != objects.len() {
            return Err(Error::single("distinct object names", format!("{objects:?}")));
        }
        let obj = |name: &str| {
            obj_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownObject(name.to_string()))
        };
        let n = objects.len();
        let unit = obj(&raw.unit)?;

        let mut tensor = vec![vec![None; n]; n];
        for (x, y, z) in &raw.tensor {
            let (x, y, z) = (obj(x)?, obj(y)?, obj(z)?);
            if tensor[x][y].replace(z).is_some_and(|old| old != z) {
                return Err(Error::single(
                    "tensor table is a function",
                    format!("({},{})", objects[x], objects[y]),
                ));
            }
        }
        let mut missing = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if tensor[x][y].is_none() {
                    missing.push(Violation::new(
                        "tensor totality",
                        format!("({},{})", objects[x], objects[y]),
                    ));
                }
            }
        }
        if !missing.is_empty() {
            return Err(Error::Validation(missing));
        }
        let tensor: Vec<Vec<ObjId>> = tensor
            .into_iter()
            .map(|r| r.into_iter().map(Option::unwrap).collect())
            .collect();

        let mut hom = vec![vec![Vec::new(); n]; n];
        let mut basis = Vec::new();
        let mut by_name = HashMap::new();
        for (key, names) in &raw.hom {
            let (s, t) = parse_hom_key(key)?;
            let (s, t) = (obj(&s)?, obj(&t)?);
            for name in names {
                let g = basis.len();
                if by_name.insert(name.clone(), g).is_some() {
                    return Err(Error::single("globally unique basis names", name.clone()));
                }
                basis.push(BasisMorphism {
                    name: name.clone(),
                    src: s,
                    tgt: t,
                    index: hom[s][t].len(),
                });
                hom[s][t].push(g);
            }
        }

        let mut p = CategoryPresentation {
            field,
            objects,
            unit,
            tensor,
            hom,
            basis,
            by_name,
            identity: Vec::new(),
            compose: Vec::new(),
            tensor_mor: Vec::new(),
            symmetry: Vec::new(),
        };

        for x in 0..n {
            let coords = match raw.identity.get(&p.objects[x]) {
                Some(map) => p.coeffs(x, x, map)?,
                None => {
                    let default = format!("id_{}", p.objects[x]);
                    match p.by_name.get(&default) {
                        Some(&g) if p.basis[g].src == x && p.basis[g].tgt == x => {
                            unit_vector(field, p.hom[x][x].len(), p.basis[g].index)
                        }
                        _ => {
                            return Err(Error::single(
                                "identity is given",
                                p.objects[x].clone(),
                            ))
                        }
                    }
                }
            };
            p.identity.push(coords);
        }

        let nb = p.basis.len();
        let mut compose = vec![vec![None; nb]; nb];
        for (key, map) in &raw.compose {
            let (g, f) = parse_pair(key)?;
            let (g, f) = (p.morphism(&g)?, p.morphism(&f)?);
            let (bg, bf) = (&p.basis[g], &p.basis[f]);
            if bf.tgt != bg.src {
                return Err(Error::Incompatible(format!("compose entry {key} is not composable")));
            }
            compose[g][f] = Some(p.coeffs(bf.src, bg.tgt, map)?);
        }
        for g in 0..nb {
            for f in 0..nb {
                let (bg, bf) = (&p.basis[g], &p.basis[f]);
                if bf.tgt != bg.src || compose[g][f].is_some() {
                    continue;
                }
                let default = if p.is_identity_basis(f) {
                    Some(p.basis_coords(g))
                } else if p.is_identity_basis(g) {
                    Some(p.basis_coords(f))
                } else {
                    None
                };
                match default {
                    Some(c) => compose[g][f] = Some(c),
                    None => {
                        return Err(Error::single(
                            "composition table is complete",
                            format!("({},{})", bg.name, bf.name),
                        ))
                    }
                }
            }
        }
        p.compose = compose;

        let mut tensor_mor = vec![vec![None; nb]; nb];
        for (key, map) in &raw.tensor_mor {
            let (a, b) = parse_pair(key)?;
            let (a, b) = (p.morphism(&a)?, p.morphism(&b)?);
            let (ba, bb) = (&p.basis[a], &p.basis[b]);
            let (s, t) = (p.tensor[ba.src][bb.src], p.tensor[ba.tgt][bb.tgt]);
            tensor_mor[a][b] = Some(p.coeffs(s, t, map)?);
        }
        let unit_id = p.hom[unit][unit]
            .iter()
            .copied()
            .find(|&g| p.is_identity_basis(g));
        for a in 0..nb {
            for b in 0..nb {
                if tensor_mor[a][b].is_some() {
                    continue;
                }
                let (ba, bb) = (&p.basis[a], &p.basis[b]);
                let default = if p.is_identity_basis(a) && p.is_identity_basis(b) {
                    Some(p.identity[p.tensor[ba.src][bb.src]].clone())
                } else if Some(a) == unit_id {
                    Some(p.basis_coords(b))
                } else if Some(b) == unit_id {
                    Some(p.basis_coords(a))
                } else {
                    None
                };
                match default {
                    Some(c) => tensor_mor[a][b] = Some(c),
                    None => {
                        return Err(Error::single(
                            "tensor table on morphisms is complete",
                            format!("({},{})", ba.name, bb.name),
                        ))
                    }
                }
            }
        }
        p.tensor_mor = tensor_mor
            .into_iter()
            .map(|r| r.into_iter().map(Option::unwrap).collect())
            .collect();

        let mut symmetry = vec![vec![None; n]; n];
        for (key, map) in &raw.symmetry {
            let (x, y) = parse_pair(key)?;
            let (x, y) = (obj(&x)?, obj(&y)?);
            let (s, t) = (p.tensor[x][y], p.tensor[y][x]);
            symmetry[x][y] = Some(p.coeffs(s, t, map)?);
        }
        for x in 0..n {
            for y in 0..n {
                if symmetry[x][y].is_some() {
                    continue;
                }
                if x == unit || y == unit {
                    symmetry[x][y] = Some(p.identity[p.tensor[x][y]].clone());
                } else {
                    return Err(Error::single(
                        "symmetry is given",
                        format!("({},{})", p.objects[x], p.objects[y]),
                    ));
                }
            }
        }
        p.symmetry = symmetry
            .into_iter()
            .map(|r| r.into_iter().map(Option::unwrap).collect())
            .collect();
        Ok(p)
    }

    fn coeffs(&self, s: ObjId, t: ObjId, map: &CoeffMap) -> Result<Vector> {
        let mut v = zero_vector(self.field, self.hom[s][t].len());
        for (name, value) in map {
            let g = self.morphism(name)?;
            let b = &self.basis[g];
            if (b.src, b.tgt) != (s, t) {
                return Err(Error::Incompatible(format!(
                    "{name} does not live in hom({}, {})",
                    self.objects[s], self.objects[t]
                )));
            }
            v[b.index] = self.field.from_json(value)?;
        }
        Ok(v)
    }

    fn basis_coords(&self, g: usize) -> Vector {
        let b = &self.basis[g];
        unit_vector(self.field, self.hom[b.src][b.tgt].len(), b.index)
    }

    /// True when the basis element is literally the identity of its object.
    pub fn is_identity_basis(&self, g: usize) -> bool {
        let b = &self.basis[g];
        b.src == b.tgt
            && self.identity.get(b.src).is_some_and(|id| {
                id.iter()
                    .enumerate()
                    .all(|(i, c)| if i == b.index { c.is_one() } else { c.is_zero() })
            })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> std::ops::Range<ObjId> {
        0..self.objects.len()
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn object(&self, name: &str) -> Result<ObjId> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn unit(&self) -> ObjId {
        self.unit
    }

    pub fn tensor_obj(&self, x: ObjId, y: ObjId) -> ObjId {
        self.tensor[x][y]
    }

    /// `x1 ⋄ … ⋄ xn`, the unit for an empty list.
    pub fn tensor_objs(&self, xs: &[ObjId]) -> ObjId {
        xs.iter().fold(self.unit, |acc, &x| self.tensor[acc][x])
    }

    pub fn morphism(&self, name: &str) -> Result<usize> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownMorphism(name.to_string()))
    }

    pub fn basis(&self) -> &[BasisMorphism] {
        &self.basis
    }

    pub fn basis_morphism(&self, g: usize) -> &BasisMorphism {
        &self.basis[g]
    }

    /// Global indices of the basis of `hom(x, y)`.
    pub fn hom_basis(&self, x: ObjId, y: ObjId) -> &[usize] {
        &self.hom[x][y]
    }

    pub fn hom_dim(&self, x: ObjId, y: ObjId) -> usize {
        self.hom[x][y].len()
    }

    pub fn basis_expr(&self, g: usize) -> MorExpr {
        let b = &self.basis[g];
        MorExpr {
            src: b.src,
            tgt: b.tgt,
            coords: self.basis_coords(g),
        }
    }

    pub fn identity(&self, x: ObjId) -> MorExpr {
        MorExpr {
            src: x,
            tgt: x,
            coords: self.identity[x].clone(),
        }
    }

    pub fn zero_mor(&self, x: ObjId, y: ObjId) -> MorExpr {
        MorExpr {
            src: x,
            tgt: y,
            coords: zero_vector(self.field, self.hom[x][y].len()),
        }
    }

    /// `s_{x,y} : x⋄y → y⋄x`.
    pub fn symmetry(&self, x: ObjId, y: ObjId) -> MorExpr {
        MorExpr {
            src: self.tensor[x][y],
            tgt: self.tensor[y][x],
            coords: self.symmetry[x][y].clone(),
        }
    }

    pub fn compose(&self, g: &MorExpr, f: &MorExpr) -> Result<MorExpr> {
        if f.tgt != g.src {
            return Err(Error::Incompatible(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.objects[g.src], self.objects[g.tgt], self.objects[f.src], self.objects[f.tgt]
            )));
        }
        let mut out = zero_vector(self.field, self.hom[f.src][g.tgt].len());
        for (i, a) in g.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let gi = self.hom[g.src][g.tgt][i];
            for (j, b) in f.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let fj = self.hom[f.src][f.tgt][j];
                let c = self.compose[gi][fj].as_ref().expect("complete table");
                axpy(&mut out, &(a * b), c);
            }
        }
        Ok(MorExpr {
            src: f.src,
            tgt: g.tgt,
            coords: out,
        })
    }

    /// `φ ⋄ ψ`.
    pub fn tensor(&self, a: &MorExpr, b: &MorExpr) -> MorExpr {
        let (s, t) = (self.tensor[a.src][b.src], self.tensor[a.tgt][b.tgt]);
        let mut out = zero_vector(self.field, self.hom[s][t].len());
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let ai = self.hom[a.src][a.tgt][i];
            for (j, y) in b.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let bj = self.hom[b.src][b.tgt][j];
                axpy(&mut out, &(x * y), &self.tensor_mor[ai][bj]);
            }
        }
        MorExpr {
            src: s,
            tgt: t,
            coords: out,
        }
    }

    /// `id_{left} ⋄ φ ⋄ id_{right}`.
    pub fn whisker(&self, left: ObjId, phi: &MorExpr, right: ObjId) -> MorExpr {
        let l = self.tensor(&self.identity(left), phi);
        self.tensor(&l, &self.identity(right))
    }

    /// `s_{x, y1⋄…⋄yj}` assembled from binary symmetries one factor at a
    /// time; agrees with [`Self::symmetry`] on the composite object in a
    /// valid presentation.
    pub fn symmetry_iterated(&self, x: ObjId, ys: &[ObjId]) -> MorExpr {
        match ys {
            [] => self.identity(x),
            [y] => self.symmetry(x, *y),
            [init @ .., last] => {
                // s_{x, Y⋄z} = (id_Y ⋄ s_{x,z}) ∘ (s_{x,Y} ⋄ id_z)
                let y = self.tensor_objs(init);
                let first = self.tensor(&self.symmetry_iterated(x, init), &self.identity(*last));
                let second = self.tensor(&self.identity(y), &self.symmetry(x, *last));
                self.compose(&second, &first).expect("composable")
            }
        }
    }

    fn name_of(&self, m: &MorExpr) -> String {
        let terms: Vec<String> = m
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}*{}", c, self.basis[self.hom[m.src][m.tgt][i]].name))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Checks every axiom on basis elements and returns all failures.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.objects.len();
        let on = |x: ObjId| self.objects[x].clone();

        for x in 0..n {
            if self.tensor[self.unit][x] != x || self.tensor[x][self.unit] != x {
                out.push(Violation::new("tensor unit", on(x)));
            }
            for y in 0..n {
                for z in 0..n {
                    if self.tensor[self.tensor[x][y]][z] != self.tensor[x][self.tensor[y][z]] {
                        out.push(Violation::new(
                            "tensor associativity",
                            format!("({},{},{})", on(x), on(y), on(z)),
                        ));
                    }
                }
            }
        }

        let nb = self.basis.len();
        let eq = |a: &MorExpr, b: &MorExpr| a.src == b.src && a.tgt == b.tgt && a.coords == b.coords;

        for f in 0..nb {
            let bf = &self.basis[f];
            let e = self.basis_expr(f);
            let left = self.compose(&self.identity(bf.tgt), &e).expect("composable");
            let right = self.compose(&e, &self.identity(bf.src)).expect("composable");
            if !eq(&left, &e) || !eq(&right, &e) {
                out.push(Violation::new("identity law", bf.name.clone()));
            }
        }
        for f in 0..nb {
            for g in 0..nb {
                if self.basis[f].tgt != self.basis[g].src {
                    continue;
                }
                for h in 0..nb {
                    if self.basis[g].tgt != self.basis[h].src {
                        continue;
                    }
                    let (ef, eg, eh) = (self.basis_expr(f), self.basis_expr(g), self.basis_expr(h));
                    let a = self
                        .compose(&self.compose(&eh, &eg).unwrap(), &ef)
                        .unwrap();
                    let b = self
                        .compose(&eh, &self.compose(&eg, &ef).unwrap())
                        .unwrap();
                    if !eq(&a, &b) {
                        out.push(Violation::new(
                            "composition associativity",
                            format!(
                                "({},{},{})",
                                self.basis[h].name, self.basis[g].name, self.basis[f].name
                            ),
                        ));
                    }
                }
            }
        }

        for x in 0..n {
            for y in 0..n {
                let t = self.tensor(&self.identity(x), &self.identity(y));
                if !eq(&t, &self.identity(self.tensor[x][y])) {
                    out.push(Violation::new(
                        "tensor of identities",
                        format!("({},{})", on(x), on(y)),
                    ));
                }
            }
        }
        for a in 0..nb {
            let ea = self.basis_expr(a);
            let l = self.tensor(&self.identity(self.unit), &ea);
            let r = self.tensor(&ea, &self.identity(self.unit));
            if !eq(&l, &ea) || !eq(&r, &ea) {
                out.push(Violation::new("tensor unit on morphisms", self.basis[a].name.clone()));
            }
            for b in 0..nb {
                let eb = self.basis_expr(b);
                for c in 0..nb {
                    let ec = self.basis_expr(c);
                    let l = self.tensor(&self.tensor(&ea, &eb), &ec);
                    let r = self.tensor(&ea, &self.tensor(&eb, &ec));
                    if !eq(&l, &r) {
                        out.push(Violation::new(
                            "tensor associativity on morphisms",
                            format!(
                                "({},{},{})",
                                self.basis[a].name, self.basis[b].name, self.basis[c].name
                            ),
                        ));
                    }
                }
            }
        }
        // interchange law on composable pairs
        let pairs: Vec<(usize, usize)> = (0..nb)
            .flat_map(|f| (0..nb).map(move |g| (f, g)))
            .filter(|&(f, g)| self.basis[f].tgt == self.basis[g].src)
            .collect();
        for &(p1, p2) in &pairs {
            for &(q1, q2) in &pairs {
                let (a1, a2) = (self.basis_expr(p1), self.basis_expr(p2));
                let (b1, b2) = (self.basis_expr(q1), self.basis_expr(q2));
                let l = self.tensor(
                    &self.compose(&a2, &a1).unwrap(),
                    &self.compose(&b2, &b1).unwrap(),
                );
                let r = self
                    .compose(&self.tensor(&a2, &b2), &self.tensor(&a1, &b1))
                    .unwrap();
                if !eq(&l, &r) {
                    out.push(Violation::new(
                        "tensor functoriality",
                        format!(
                            "({},{},{},{})",
                            self.basis[p2].name,
                            self.basis[p1].name,
                            self.basis[q2].name,
                            self.basis[q1].name
                        ),
                    ));
                }
            }
        }

        for x in 0..n {
            let s1 = self.symmetry(x, self.unit);
            let s2 = self.symmetry(self.unit, x);
            if !eq(&s1, &self.identity(x)) || !eq(&s2, &self.identity(x)) {
                out.push(Violation::new("symmetry unit", on(x)));
            }
            for y in 0..n {
                let twice = self
                    .compose(&self.symmetry(y, x), &self.symmetry(x, y))
                    .unwrap();
                if !eq(&twice, &self.identity(self.tensor[x][y])) {
                    out.push(Violation::new(
                        "symmetry involution",
                        format!("({},{})", on(x), on(y)),
                    ));
                }
                for z in 0..n {
                    let l = self.symmetry(self.tensor[x][y], z);
                    let r = self
                        .compose(
                            &self.tensor(&self.symmetry(x, z), &self.identity(y)),
                            &self.tensor(&self.identity(x), &self.symmetry(y, z)),
                        )
                        .unwrap();
                    if !eq(&l, &r) {
                        out.push(Violation::new(
                            "symmetry coherence",
                            format!("({},{},{})", on(x), on(y), on(z)),
                        ));
                    }
                }
            }
        }
        for a in 0..nb {
            for b in 0..nb {
                let (ea, eb) = (self.basis_expr(a), self.basis_expr(b));
                let l = self
                    .compose(&self.symmetry(ea.tgt, eb.tgt), &self.tensor(&ea, &eb))
                    .unwrap();
                let r = self
                    .compose(&self.tensor(&eb, &ea), &self.symmetry(ea.src, eb.src))
                    .unwrap();
                if !eq(&l, &r) {
                    out.push(Violation::new(
                        "symmetry naturality",
                        format!("({},{})", self.basis[a].name, self.basis[b].name),
                    ));
                }
            }
        }
        out
    }

    /// Describes a morphism by its nonzero basis terms.
    pub fn describe(&self, m: &MorExpr) -> String {
        self.name_of(m)
    }

    /// File form of this presentation with every table written out.
    pub fn to_file(&self) -> CategoryFile {
        use std::collections::BTreeMap;
        let coeff_map = |s: ObjId, t: ObjId, v: &Vector| -> CoeffMap {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.basis[self.hom[s][t][i]].name.clone(), c.to_json()))
                .collect()
        };
        let n = self.objects.len();
        let mut hom = BTreeMap::new();
        for x in 0..n {
            for y in 0..n {
                if !self.hom[x][y].is_empty() {
                    hom.insert(
                        format!("{}->{}", self.objects[x], self.objects[y]),
                        self.hom[x][y].iter().map(|&g| self.basis[g].name.clone()).collect(),
                    );
                }
            }
        }
        let identity = (0..n)
            .map(|x| (self.objects[x].clone(), coeff_map(x, x, &self.identity[x])))
            .collect();
        let nb = self.basis.len();
        let mut compose = BTreeMap::new();
        let mut tensor_mor = BTreeMap::new();
        for a in 0..nb {
            for b in 0..nb {
                let (ba, bb) = (&self.basis[a], &self.basis[b]);
                if bb.tgt == ba.src {
                    let c = self.compose[a][b].as_ref().unwrap();
                    compose.insert(
                        format!("({},{})", ba.name, bb.name),
                        coeff_map(bb.src, ba.tgt, c),
                    );
                }
                tensor_mor.insert(
                    format!("({},{})", ba.name, bb.name),
                    coeff_map(
                        self.tensor[ba.src][bb.src],
                        self.tensor[ba.tgt][bb.tgt],
                        &self.tensor_mor[a][b],
                    ),
                );
            }
        }
        let mut symmetry = BTreeMap::new();
        for x in 0..n {
            for y in 0..n {
                symmetry.insert(
                    format!("({},{})", self.objects[x], self.objects[y]),
                    coeff_map(self.tensor[x][y], self.tensor[y][x], &self.symmetry[x][y]),
                );
            }
        }
        CategoryFile {
            field: FieldSpec::from_field(self.field),
            objects: self.objects.clone(),
            unit: self.objects[self.unit].clone(),
            tensor: (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .map(|(x, y)| {
                    (
                        self.objects[x].clone(),
                        self.objects[y].clone(),
                        self.objects[self.tensor[x][y]].clone(),
                    )
                })
                .collect(),
            hom,
            identity,
            compose,
            tensor_mor,
            symmetry,
        }
    }
}

/// One query against a presentation.
#[derive(Clone, Debug)]
pub enum MorQuery<'a> {
    Compose(&'a MorExpr, &'a MorExpr),
    Tensor(&'a MorExpr, &'a MorExpr),
    Symmetry(ObjId, ObjId),
    Identity(ObjId),
}

pub fn mor_ops(p: &CategoryPresentation, query: MorQuery<'_>) -> Result<MorExpr> {
    let check = |m: &MorExpr| -> Result<()> {
        if m.src >= p.num_objects() || m.tgt >= p.num_objects() {
            return Err(Error::UnknownObject(format!("#{}", m.src.max(m.tgt))));
        }
        if m.coords.len() != p.hom_dim(m.src, m.tgt) {
            return Err(Error::DimensionMismatch("morphism coordinates".into()));
        }
        Ok(())
    };
    let check_obj = |x: ObjId| {
        if x < p.num_objects() {
            Ok(())
        } else {
            Err(Error::UnknownObject(format!("#{x}")))
        }
    };
    match query {
        MorQuery::Compose(g, f) => {
            check(g)?;
            check(f)?;
            p.compose(g, f)
        }
        MorQuery::Tensor(a, b) => {
            check(a)?;
            check(b)?;
            Ok(p.tensor(a, b))
        }
        MorQuery::Symmetry(x, y) => {
            check_obj(x)?;
            check_obj(y)?;
            Ok(p.symmetry(x, y))
        }
        MorQuery::Identity(x) => {
            check_obj(x)?;
            Ok(p.identity(x))
        }
    }
}
