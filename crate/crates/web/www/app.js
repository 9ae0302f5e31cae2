import init, { sortWord, listPreimages, exploreShape } from "./pkg/qslab_web.js";

const show = (id, text, failed = false) => {
  const el = document.getElementById(id);
  el.textContent = text;
  el.classList.toggle("error", failed);
};

const run = (id, f) => {
  try {
    show(id, f());
  } catch (e) {
    show(id, e.message ?? String(e), true);
  }
};

const word = (w) => w.join(" ");

function sortView() {
  const r = JSON.parse(sortWord(document.getElementById("sort-input").value));
  const lines = [`q(${word(r.input)}) = ${word(r.output)}`, `operations: ${r.trace}`, "", "LTR maxima moving right:"];
  r.steps.forEach((s) => lines.push("  " + word(s)));
  return lines.join("\n");
}

function preimageView() {
  const r = JSON.parse(listPreimages(document.getElementById("pre-input").value));
  const lines = [`${r.count} preimage(s) of ${word(r.target)}`];
  r.members.forEach((m) => lines.push("  " + word(m)));
  if (r.truncated) lines.push(`  ... first ${r.members.length} shown`);
  return lines.join("\n");
}

function shapeView() {
  const n = (id) => Number(document.getElementById(id).value);
  const [m1, p1, m2] = [n("m1"), n("p1"), n("m2")];
  const r = JSON.parse(exploreShape(m1, p1, m2));
  const terms = r.coefficients.map((c, t) => `${c}*C(${m1 + t})`).join(" + ");
  const lines = [
    `witness: ${word(r.witness)}`,
    `preimages: ${r.count}`,
    `= ${terms}`,
    "",
    `coefficients as polynomials in p1 (m2 = ${m2}):`,
  ];
  r.polynomials.forEach((p, t) => lines.push(`  C(m1+${t}): ${p}`));
  return lines.join("\n");
}

const bind = (form, out, view) =>
  document.getElementById(form).addEventListener("submit", (e) => {
    e.preventDefault();
    run(out, view);
  });

await init();
bind("sort-form", "sort-out", sortView);
bind("pre-form", "pre-out", preimageView);
bind("shape-form", "shape-out", shapeView);
run("sort-out", sortView);
run("pre-out", preimageView);
run("shape-out", shapeView);
