#include "vcbent/appendix.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "vcbent/bentlab.hpp"
#include "vcbent/generator.hpp"
#include "vcbent/genperm.hpp"

namespace vcbent {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

bool is_gamma(const std::string& name) {
  for (auto g : gamma_names())
    if (g == name) return true;
  return false;
}

}  // namespace

Fixture load_appendix(std::istream& in) {
  Fixture fx;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() != 5) {
      fx.errors.push_back({lineno, "expected 5 tab-separated fields, got " + std::to_string(cols.size())});
      continue;
    }
    try {
      AppendixRow row;
      row.line = lineno;
      row.class_id = std::stoi(cols[0]);
      row.row = std::stoi(cols[1]);
      row.g = MvFunction::from_digits(3, 2, cols[2]);
      auto labels = split(cols[3], ',');
      if (labels.size() != 2 || !is_gamma(labels[0]) || !is_gamma(labels[1]))
        throw std::invalid_argument("label '" + cols[3] + "' is not alpha,beta over I,P01,P12,N,X,XT");
      row.alpha = labels[0];
      row.beta = labels[1];
      auto e = MvFunction::from_digits(3, 2, cols[4]);
      row.exponents.assign(e.values().begin(), e.values().end());
      if (row.class_id < 1 || row.class_id > 9) throw std::invalid_argument("class must be in 1..9");
      fx.rows.push_back(std::move(row));
    } catch (const std::exception& ex) {
      fx.errors.push_back({lineno, ex.what()});
    }
  }
  return fx;
}

Fixture load_appendix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  return load_appendix(in);
}

std::vector<RowCheck> verify_appendix(const std::vector<AppendixRow>& rows) {
  std::map<int, ClassRecord> classes;
  std::vector<RowCheck> out;
  for (const auto& row : rows) {
    RowCheck check;
    check.row = row;
    auto it = classes.find(row.class_id);
    if (it == classes.end()) {
      auto rec = generate_class(class_seed(row.class_id), row.class_id);
      if (!rec) throw std::logic_error("verify_appendix: degenerate seed");
      it = classes.emplace(row.class_id, std::move(*rec)).first;
    }
    const ClassRecord& rec = it->second;

    const Spectrum sg = circular_spectrum(row.g);
    auto form = strict_exponents(sg);
    check.exponents_ok = form && form->sign == 1 && form->t == row.exponents;
    for (const auto& r : rec.rows)
      if (r.g == row.g) check.member_ok = true;

    const Spectrum sf = circular_spectrum(rec.seed);
    auto reproduces = [&](const GenPerm& p) { return apply(p, sf) == sg; };
    const GenPerm labelled = kron(gamma(row.alpha), gamma(row.beta));
    std::optional<GenPerm> used;
    if (reproduces(labelled)) {
      check.label_ok = true;
      check.used_label = row.alpha + "," + row.beta;
      used = labelled;
    } else {
      for (const auto& entry : kron_perm_catalog())
        if (reproduces(entry.perm)) {
          check.used_label = entry.label();
          used = entry.perm;
          check.note = "label " + row.alpha + "," + row.beta + " does not reproduce this row; " + entry.label() + " does";
          break;
        }
      if (!used) check.note = "no alpha,beta in the catalog reproduces this row";
    }
    if (used) {
      const auto gvec = vcbent::apply(as_dense(conjugate_by_c(*used)), sign_of(rec.seed).entries);
      check.w_route_ok = gvec && *gvec == sign_of(row.g).entries;
    }
    if (!check.exponents_ok) check.note += (check.note.empty() ? "" : "; ") + std::string("spectrum exponents differ");
    if (!check.member_ok) check.note += (check.note.empty() ? "" : "; ") + std::string("g is not a primitive of the class");
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace vcbent
