#include "vnumlab/io.hpp"

#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>

#include "vnumlab/errors.hpp"

namespace vnumlab {

namespace {

// Input iterator over the raw text that publishes how far the JSON lexer has
// read, so SAX callbacks can be mapped back to byte offsets.
class TrackingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  TrackingIterator() = default;
  TrackingIterator(const char* p, const char** seen) : p_(p), seen_(seen) {}

  reference operator*() const { return *p_; }
  TrackingIterator& operator++() {
    ++p_;
    if (seen_) *seen_ = p_;
    return *this;
  }
  TrackingIterator operator++(int) {
    auto copy = *this;
    ++*this;
    return copy;
  }
  friend bool operator==(const TrackingIterator& a, const TrackingIterator& b) { return a.p_ == b.p_; }
  friend bool operator!=(const TrackingIterator& a, const TrackingIterator& b) { return a.p_ != b.p_; }

 private:
  const char* p_ = nullptr;
  const char** seen_ = nullptr;
};

// Records the byte offset of every value and key by JSON pointer.
class PositionIndex : public nlohmann::json_sax<Json> {
 public:
  PositionIndex(std::string_view text) : text_(text), seen_(text.data()) {}

  void build() {
    TrackingIterator first(text_.data(), &seen_);
    TrackingIterator last(text_.data() + text_.size(), nullptr);
    Json::sax_parse(first, last, this);
  }

  // Offset of the value at `path`, falling back to the nearest ancestor.
  std::size_t offset(std::string path) const {
    while (true) {
      auto it = offsets_.find(path);
      if (it != offsets_.end()) return it->second;
      if (path.empty()) return 0;
      path.erase(path.rfind('/'));
    }
  }
  std::size_t key_offset(const std::string& path) const {
    auto it = offsets_.find(path + "#key");
    return it == offsets_.end() ? offset(path) : it->second;
  }

  bool null() override { return scalar(); }
  bool boolean(bool) override { return scalar(); }
  bool number_integer(number_integer_t) override { return scalar(); }
  bool number_unsigned(number_unsigned_t) override { return scalar(); }
  bool number_float(number_float_t, const string_t&) override { return scalar(); }
  bool binary(binary_t&) override { return scalar(); }
  bool string(string_t&) override {
    record(path(), string_start());
    advance();
    return true;
  }
  bool key(string_t& k) override {
    frames_.back().key = k;
    record(path() + "#key", string_start());
    return true;
  }
  bool start_object(std::size_t) override { return open(false); }
  bool start_array(std::size_t) override { return open(true); }
  bool end_object() override { return close(); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override {
    return false;
  }

 private:
  struct Frame {
    bool array = false;
    std::size_t index = 0;
    std::string key;
  };

  std::size_t consumed() const { return static_cast<std::size_t>(seen_ - text_.data()); }

  // The lexer stops right after a closing quote; walk back to its partner.
  std::size_t string_start() const {
    std::size_t i = consumed();
    if (i < 2) return 0;
    i -= 2;
    while (i > 0) {
      if (text_[i] == '"') {
        std::size_t slashes = 0;
        while (i > slashes && text_[i - slashes - 1] == '\\') ++slashes;
        if (slashes % 2 == 0) return i;
      }
      --i;
    }
    return 0;
  }

  // Numbers are read one character past their end.
  std::size_t scalar_start() const {
    auto token = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
    };
    std::size_t i = consumed();
    if (i > 0 && !token(text_[i - 1])) --i;
    while (i > 0 && token(text_[i - 1])) --i;
    return i;
  }

  bool scalar() {
    record(path(), scalar_start());
    advance();
    return true;
  }
  bool open(bool array) {
    record(path(), consumed() == 0 ? 0 : consumed() - 1);
    frames_.push_back({array, 0, {}});
    return true;
  }
  bool close() {
    frames_.pop_back();
    advance();
    return true;
  }
  void advance() {
    if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
  }
  std::string path() const {
    std::string out;
    for (const auto& f : frames_) out += "/" + (f.array ? std::to_string(f.index) : f.key);
    return out;
  }
  void record(const std::string& p, std::size_t off) { offsets_.emplace(p, off); }

  std::string_view text_;
  const char* seen_;
  std::vector<Frame> frames_;
  std::map<std::string, std::size_t> offsets_;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  return {line, offset - line_start + 1};
}

class Reader {
 public:
  Reader(std::string_view text, const PositionIndex& index) : text_(text), index_(index) {}

  [[noreturn]] void fail(const std::string& code, const std::string& detail, const std::string& path,
                         std::size_t extra_columns = 0, bool at_key = false) const {
    const auto off = at_key ? index_.key_offset(path) : index_.offset(path);
    const auto [line, col] = line_column(text_, off);
    throw ParseError(code, detail + (path.empty() ? "" : " at " + path), line, col + extra_columns);
  }

  void only_keys(const Json& obj, const std::string& path,
                 std::initializer_list<std::string_view> allowed) const {
    for (const auto& [k, _] : obj.items()) {
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
        fail("unknown-field", "unknown field \"" + k + "\"", path + "/" + k, 0, true);
      }
    }
  }

  const Json& object(const Json& v, const std::string& path) const {
    if (!v.is_object()) fail("schema-error", "expected an object", path);
    return v;
  }
  const Json* member(const Json& obj, const std::string& key) const {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
  }
  const Json& required(const Json& obj, const std::string& path, const std::string& key) const {
    const Json* v = member(obj, key);
    if (!v) fail("schema-error", "missing field \"" + key + "\"", path);
    return *v;
  }
  std::string string(const Json& v, const std::string& path) const {
    if (!v.is_string()) fail("schema-error", "expected a string", path);
    return v.get<std::string>();
  }
  std::int64_t integer(const Json& v, const std::string& path) const {
    if (!v.is_number_integer()) fail("schema-error", "expected an integer", path);
    return v.get<std::int64_t>();
  }
  std::vector<std::string> strings(const Json& v, const std::string& path) const {
    if (!v.is_array()) fail("schema-error", "expected an array of strings", path);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(string(v[i], path + "/" + std::to_string(i)));
    return out;
  }

  MonomialIdeal ideal(const RingPtr& ring, const Json& v, const std::string& path) const {
    const auto texts = strings(v, path);
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < texts.size(); ++i) {
      const auto item = path + "/" + std::to_string(i);
      try {
        gens.push_back(parse_monomial(*ring, texts[i]));
      } catch (const ParseError& e) {
        // +1 skips the opening quote; e.column() is 1-based within the string.
        fail(e.code(), "bad monomial \"" + texts[i] + "\"", item, e.column());
      } catch (const Error& e) {
        fail(e.code(), "bad monomial \"" + texts[i] + "\"", item, 1);
      }
    }
    return MonomialIdeal(ring, std::move(gens));
  }

 private:
  std::string_view text_;
  const PositionIndex& index_;
};

}  // namespace

MonomialIdeal ProblemDocument::ideal(const std::string& name) const {
  if (name == "1") return MonomialIdeal::unit(ring);
  if (name == "0") return MonomialIdeal::zero(ring);
  auto it = ideals.find(name);
  if (it == ideals.end()) throw Error("unknown-ideal", "no ideal named \"" + name + "\"");
  return it->second;
}

Subquotient ProblemDocument::module() const { return Subquotient(num, den, shift); }

FamilySpec ProblemDocument::family_spec() const {
  if (!family) throw Error("missing-family", "the document has no family section");
  FamilySpec spec{num, den, ideal(family->I), std::nullopt, ideal(family->a), family->kind,
                  family->n_max};
  if (family->J) spec.J = ideal(*family->J);
  return spec;
}

ProblemDocument parse_input(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto off = e.byte == 0 ? 0 : e.byte - 1;
    const auto [line, col] = line_column(text, off);
    throw ParseError("syntax-error", "invalid JSON", line, col);
  }
  PositionIndex index(text);
  index.build();
  const Reader rd(text, index);

  rd.object(root, "");
  rd.only_keys(root, "", {"ring", "module", "ideals", "family", "operation", "options"});

  // ring
  const auto& ring_j = rd.object(rd.required(root, "", "ring"), "/ring");
  rd.only_keys(ring_j, "/ring", {"vars", "weights"});
  const auto vars = rd.strings(rd.required(ring_j, "/ring", "vars"), "/ring/vars");
  std::vector<std::int64_t> weights(vars.size(), 1);
  if (const Json* w = rd.member(ring_j, "weights")) {
    if (!w->is_array()) rd.fail("schema-error", "expected an array of integers", "/ring/weights");
    weights.clear();
    for (std::size_t i = 0; i < w->size(); ++i) {
      const auto p = "/ring/weights/" + std::to_string(i);
      weights.push_back(rd.integer((*w)[i], p));
      if (weights.back() < 1) rd.fail("non-positive-weight", "weights must be positive", p);
    }
  }
  RingPtr ring;
  try {
    ring = make_ring(vars, weights);
  } catch (const Error& e) {
    rd.fail(e.code(), e.what(), "/ring");
  }
  ProblemDocument doc{ring, MonomialIdeal::unit(ring), MonomialIdeal::zero(ring), 0, {}, {}, {}, {}};

  // module
  if (const Json* m = rd.member(root, "module")) {
    rd.object(*m, "/module");
    rd.only_keys(*m, "/module", {"num", "den", "shift"});
    if (const Json* v = rd.member(*m, "num")) doc.num = rd.ideal(doc.ring, *v, "/module/num");
    if (const Json* v = rd.member(*m, "den")) doc.den = rd.ideal(doc.ring, *v, "/module/den");
    if (const Json* v = rd.member(*m, "shift")) doc.shift = rd.integer(*v, "/module/shift");
    if (!doc.num.contains(doc.den)) {
      rd.fail("invalid-spec", "module denominator is not contained in the numerator", "/module");
    }
  }

  // ideals
  if (const Json* t = rd.member(root, "ideals")) {
    rd.object(*t, "/ideals");
    for (const auto& [name, gens] : t->items()) {
      if (name == "0" || name == "1") {
        rd.fail("schema-error", "ideal names \"0\" and \"1\" are reserved", "/ideals/" + name, 0, true);
      }
      doc.ideals.emplace(name, rd.ideal(doc.ring, gens, "/ideals/" + name));
    }
  }
  auto ideal_name = [&](const Json& v, const std::string& path) {
    auto name = rd.string(v, path);
    if (name != "0" && name != "1" && !doc.ideals.count(name)) {
      rd.fail("unknown-ideal", "no ideal named \"" + name + "\"", path);
    }
    return name;
  };

  // family
  if (const Json* f = rd.member(root, "family")) {
    rd.object(*f, "/family");
    rd.only_keys(*f, "/family", {"kind", "I", "a", "J", "n_max"});
    FamilyDoc fam;
    if (const Json* k = rd.member(*f, "kind")) {
      const auto name = rd.string(*k, "/family/kind");
      const auto kind = parse_kind(name);
      if (!kind) rd.fail("unknown-kind", "unknown family kind \"" + name + "\"", "/family/kind");
      fam.kind = *kind;
    }
    fam.I = ideal_name(rd.required(*f, "/family", "I"), "/family/I");
    if (const Json* v = rd.member(*f, "a")) fam.a = ideal_name(*v, "/family/a");
    if (const Json* v = rd.member(*f, "J")) fam.J = ideal_name(*v, "/family/J");
    if (const Json* v = rd.member(*f, "n_max")) {
      fam.n_max = static_cast<int>(rd.integer(*v, "/family/n_max"));
    }
    doc.family = fam;
    try {
      doc.family_spec().validate();
    } catch (const Error& e) {
      rd.fail(e.code(), e.what(), "/family");
    }
  }

  // operation
  if (const Json* o = rd.member(root, "operation")) {
    rd.object(*o, "/operation");
    rd.only_keys(*o, "/operation", {"op", "args", "exponent"});
    OperationDoc op;
    op.op = rd.string(rd.required(*o, "/operation", "op"), "/operation/op");
    static const std::set<std::string> known{"sum", "product", "intersect", "colon", "saturate", "power"};
    if (!known.count(op.op)) rd.fail("schema-error", "unknown operation \"" + op.op + "\"", "/operation/op");
    const auto& args = rd.required(*o, "/operation", "args");
    if (!args.is_array()) rd.fail("schema-error", "expected an array of ideal names", "/operation/args");
    for (std::size_t i = 0; i < args.size(); ++i) {
      op.args.push_back(ideal_name(args[i], "/operation/args/" + std::to_string(i)));
    }
    const std::size_t arity = op.op == "power" ? 1 : 2;
    if (op.args.size() != arity) {
      rd.fail("schema-error", op.op + " takes " + std::to_string(arity) + " argument(s)", "/operation/args");
    }
    if (const Json* e = rd.member(*o, "exponent")) {
      const auto v = rd.integer(*e, "/operation/exponent");
      if (v < 0 || v > 1000000) rd.fail("schema-error", "exponent out of range", "/operation/exponent");
      op.exponent = static_cast<std::uint32_t>(v);
    }
    doc.operation = op;
  }

  // options
  if (const Json* o = rd.member(root, "options")) {
    rd.object(*o, "/options");
    rd.only_keys(*o, "/options", {"window", "s_max", "degree_bound", "format", "out"});
    if (const Json* v = rd.member(*o, "window")) {
      doc.options.window = static_cast<int>(rd.integer(*v, "/options/window"));
      if (doc.options.window < 2) rd.fail("schema-error", "window must be at least 2", "/options/window");
    }
    if (const Json* v = rd.member(*o, "s_max")) {
      doc.options.s_max = static_cast<int>(rd.integer(*v, "/options/s_max"));
      if (doc.options.s_max < 1) rd.fail("schema-error", "s_max must be at least 1", "/options/s_max");
    }
    if (const Json* v = rd.member(*o, "degree_bound")) {
      doc.options.degree_bound = rd.integer(*v, "/options/degree_bound");
    }
    if (const Json* v = rd.member(*o, "format")) {
      doc.options.format = rd.string(*v, "/options/format");
      if (doc.options.format != "json" && doc.options.format != "csv") {
        rd.fail("schema-error", "format must be json or csv", "/options/format");
      }
    }
    if (const Json* v = rd.member(*o, "out")) doc.options.out = rd.string(*v, "/options/out");
  }
  return doc;
}

Json to_json(const ProblemDocument& doc) {
  Json j;
  j["ring"] = {{"vars", doc.ring->names()}, {"weights", doc.ring->weights()}};
  j["module"] = {{"num", doc.num.to_strings()}, {"den", doc.den.to_strings()}, {"shift", doc.shift}};
  j["ideals"] = Json::object();
  for (const auto& [name, ideal] : doc.ideals) j["ideals"][name] = ideal.to_strings();
  if (doc.family) {
    Json f = {{"kind", kind_name(doc.family->kind)},
              {"I", doc.family->I},
              {"a", doc.family->a},
              {"n_max", doc.family->n_max}};
    if (doc.family->J) f["J"] = *doc.family->J;
    j["family"] = f;
  }
  if (doc.operation) {
    j["operation"] = {{"op", doc.operation->op}, {"args", doc.operation->args}};
    if (doc.operation->op == "power") j["operation"]["exponent"] = doc.operation->exponent;
  }
  Json o = {{"window", doc.options.window}, {"s_max", doc.options.s_max}, {"format", doc.options.format}};
  if (doc.options.degree_bound) o["degree_bound"] = *doc.options.degree_bound;
  if (doc.options.out) o["out"] = *doc.options.out;
  j["options"] = o;
  return j;
}

Json to_json(const ExtInt& value) {
  if (value.is_finite()) return value.value();
  return value.to_string();
}

ExtInt ext_int_from_json(const Json& value) {
  if (value.is_number_integer()) return ExtInt(value.get<std::int64_t>());
  if (value == "inf") return ExtInt::infinity();
  if (value == "-inf") return ExtInt::neg_infinity();
  throw Error("schema-error", "expected an integer, \"inf\" or \"-inf\"");
}

Json to_json(const GradedRing& ring, const MonomialPrime& p) { return p.names(ring); }

Json to_json(const GradedRing& ring, const AssSet& ass) {
  Json out = Json::array();
  for (const auto& p : ass) out.push_back(to_json(ring, p));
  return out;
}

Json to_json(const GradedRing& ring, const VReport& report) {
  Json per = Json::object();
  Json wit = Json::object();
  for (const auto& [p, d] : report.per_prime) per[p.key(ring)] = d;
  for (const auto& [p, w] : report.witnesses) wit[p.key(ring)] = format_monomial(ring, w);
  return {{"v", to_json(report.overall)}, {"per_prime", per}, {"witness", wit}};
}

Json to_json(const GradedRing& ring, const SeriesPoint& point) {
  Json j = to_json(ring, point.v);
  j["n"] = point.n;
  j["indeg"] = to_json(point.indeg);
  j["ass"] = to_json(ring, point.ass);
  j["colon_stable"] = point.colon_stable;
  return j;
}

Json to_json(const GradedRing& ring, const InvariantSeries& series) {
  Json points = Json::array();
  for (const auto& p : series.points) points.push_back(to_json(ring, p));
  return {{"kind", kind_name(series.kind)},
          {"ann_I_zero", series.ann_I_zero},
          {"ann_y1_zero", series.ann_y1_zero},
          {"points", points}};
}

Json to_json(const LinearLaw& law) {
  return {{"slope", law.slope},
          {"intercept", law.intercept},
          {"start_n", law.start_n},
          {"stabilized", law.stabilized}};
}

Json to_json(const GradedRing& ring, const DeltaProbe& probe) {
  Json verdicts = Json::array();
  for (const auto& v : probe.verdicts) {
    verdicts.push_back({{"generator", format_monomial(ring, v.generator)},
                        {"degree", v.degree},
                        {"in_radical", v.in_radical},
                        {"exponent", v.exponent}});
  }
  Json j = {{"verdicts", verdicts}, {"delta_index", nullptr}, {"delta_degree", nullptr}};
  if (probe.delta_index) j["delta_index"] = *probe.delta_index;
  if (probe.delta_degree) j["delta_degree"] = *probe.delta_degree;
  return j;
}

Json to_json(const GradedRing& ring, const ComplianceReport& report) {
  Json families = Json::array();
  for (const auto& f : report.families) {
    Json j = {{"kind", kind_name(f.kind)},
              {"eventually_zero", f.eventually_zero},
              {"indeg_law", to_json(f.indeg_law)},
              {"v_law", to_json(f.v_law)},
              {"ass_tail_start", f.ass_tail_start},
              {"v", Json::array()}};
    for (const auto& v : f.series.v_values()) j["v"].push_back(to_json(v));
    if (f.probe) j["probe"] = to_json(ring, *f.probe);
    families.push_back(j);
  }
  Json items = Json::array();
  for (const auto& i : report.items) {
    items.push_back({{"id", std::string(1, i.id)},
                     {"title", i.title},
                     {"verdict", verdict_name(i.verdict)},
                     {"detail", i.detail}});
  }
  Json j = {{"ok", report.ok()}, {"families", families}, {"items", items},
            {"power_inside_submodule", nullptr}};
  if (report.power_inside_submodule) j["power_inside_submodule"] = *report.power_inside_submodule;
  return j;
}

namespace {

MonomialPrime prime_from_key(const GradedRing& ring, const std::string& key) {
  std::vector<std::size_t> support;
  std::stringstream in(key);
  std::string name;
  while (std::getline(in, name, ',')) {
    const auto idx = ring.index_of(name);
    if (!idx) throw Error("schema-error", "unknown variable in prime key");
    support.push_back(*idx);
  }
  return MonomialPrime(std::move(support));
}

MonomialPrime prime_from_names(const GradedRing& ring, const Json& names) {
  std::string key;
  for (const auto& n : names) key += (key.empty() ? "" : ",") + n.get<std::string>();
  return prime_from_key(ring, key);
}

}  // namespace

InvariantSeries series_from_json(const GradedRing& ring, const Json& j) {
  InvariantSeries s;
  const auto kind = parse_kind(j.at("kind").get<std::string>());
  if (!kind) throw Error("schema-error", "unknown family kind");
  s.kind = *kind;
  s.ann_I_zero = j.at("ann_I_zero").get<bool>();
  s.ann_y1_zero = j.at("ann_y1_zero").get<bool>();
  for (const auto& pj : j.at("points")) {
    SeriesPoint p;
    p.n = pj.at("n").get<int>();
    if (p.n != static_cast<int>(s.points.size())) throw Error("schema-error", "points out of order");
    p.indeg = ext_int_from_json(pj.at("indeg"));
    p.v.overall = ext_int_from_json(pj.at("v"));
    std::vector<MonomialPrime> primes;
    for (const auto& a : pj.at("ass")) primes.push_back(prime_from_names(ring, a));
    p.ass = AssSet(std::move(primes));
    for (const auto& [k, d] : pj.at("per_prime").items()) {
      p.v.per_prime.emplace(prime_from_key(ring, k), d.get<std::int64_t>());
    }
    for (const auto& [k, w] : pj.at("witness").items()) {
      p.v.witnesses.emplace(prime_from_key(ring, k), parse_monomial(ring, w.get<std::string>()));
    }
    p.colon_stable = pj.at("colon_stable").get<bool>();
    s.points.push_back(std::move(p));
  }
  return s;
}

std::string prime_label(const GradedRing& ring, const MonomialPrime& p) {
  return "(" + (p.is_zero() ? std::string("0") : p.key(ring)) + ")";
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string series_csv(const GradedRing& ring, const InvariantSeries& series) {
  std::set<MonomialPrime> primes;
  for (const auto& p : series.points) primes.insert(p.ass.begin(), p.ass.end());
  std::ostringstream out;
  out << "n,indeg,v,ass";
  for (const auto& p : primes) out << ',' << csv_field("v_p:" + prime_label(ring, p));
  out << ",colon_stable\n";
  for (const auto& pt : series.points) {
    std::string ass;
    for (const auto& p : pt.ass) ass += (ass.empty() ? "" : ";") + prime_label(ring, p);
    out << pt.n << ',' << pt.indeg.to_string() << ',' << pt.v.overall.to_string() << ','
        << csv_field(ass);
    for (const auto& p : primes) {
      auto it = pt.v.per_prime.find(p);
      out << ',' << (it == pt.v.per_prime.end() ? std::string("inf") : std::to_string(it->second));
    }
    out << ',' << (pt.colon_stable ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string cache_key(const ProblemDocument& doc) {
  Json j = to_json(doc);
  j.erase("options");
  if (j.contains("family")) j["family"].erase("n_max");
  return j.dump();
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xF];
  return out;
}

CachedSeries cached_series(const ProblemDocument& doc, const std::filesystem::path& dir) {
  const auto spec = doc.family_spec();
  spec.validate();
  const auto key = cache_key(doc);
  const auto file = dir / (fnv1a_hex(key) + ".json");

  CachedSeries result;
  InvariantSeries prefix;
  try {
    std::ifstream in(file);
    if (in) {
      const Json j = Json::parse(in);
      if (j.at("key").get<std::string>() == key) {
        prefix = series_from_json(*doc.ring, j.at("series"));
        if (prefix.kind != spec.kind) prefix = {};
      }
    }
  } catch (const std::exception&) {
    prefix = {};
  }

  result.reused_points = std::min<int>(static_cast<int>(prefix.points.size()), spec.n_max + 1);
  result.hit = result.reused_points > 0;
  const bool covers = prefix.n_max() >= spec.n_max;
  result.series = extend_series(spec, std::move(prefix));
  if (covers) return result;

  std::filesystem::create_directories(dir);
  std::random_device rd;
  const auto tmp = file.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("io-error", "cannot write cache file " + tmp);
    out << Json{{"key", key}, {"series", to_json(*doc.ring, result.series)}}.dump();
    if (!out) throw Error("io-error", "cannot write cache file " + tmp);
  }
  std::filesystem::rename(tmp, file);
  return result;
}

}  // namespace vnumlab
