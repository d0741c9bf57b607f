#include "piqc/hamiltonian_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "piqc/errors.hpp"

namespace piqc::io {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

double require_number(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + "." + key, "missing field");
  if (!it->is_number()) throw ParseError(where + "." + key, "expected a number");
  const double v = it->get<double>();
  if (!std::isfinite(v)) throw ParseError(where + "." + key, "non-finite value");
  return v;
}

}  // namespace

Problem parse_pauli_sum(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "malformed document");
  }
  if (!doc.is_object()) throw ParseError("", "top level must be an object");

  const auto nq = doc.find("n_qubits");
  if (nq == doc.end()) throw ParseError("n_qubits", "missing field");
  if (!nq->is_number_integer()) throw ParseError("n_qubits", "expected an integer");
  const auto n_qubits = nq->get<long long>();
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw ParseError("n_qubits", "out of range");

  const auto terms = doc.find("terms");
  if (terms == doc.end()) throw ParseError("terms", "missing field");
  if (!terms->is_array()) throw ParseError("terms", "expected an array");

  PauliSum h(static_cast<int>(n_qubits));
  for (std::size_t i = 0; i < terms->size(); ++i) {
    const std::string where = "terms[" + std::to_string(i) + "]";
    const json& t = (*terms)[i];
    if (!t.is_object()) throw ParseError(where, "expected an object");
    const double re = require_number(t, "coeff_re", where);
    const double im = t.contains("coeff_im") ? require_number(t, "coeff_im", where) : 0.0;
    if (std::abs(im) > 1e-12) throw ParseError(where + ".coeff_im", "imaginary coefficient violates Hermiticity");
    const auto p = t.find("paulis");
    if (p == t.end()) throw ParseError(where + ".paulis", "missing field");
    if (!p->is_string()) throw ParseError(where + ".paulis", "expected a string");
    const auto axes = p->get<std::string>();
    if (static_cast<long long>(axes.size()) != n_qubits) {
      throw ParseError(where + ".paulis", "length " + std::to_string(axes.size()) + " does not match n_qubits " +
                                              std::to_string(n_qubits));
    }
    try {
      h.add(re, axes);
    } catch (const InputError& e) {
      throw ParseError(where + ".paulis", e.what());
    }
  }

  ProblemMetadata meta;
  if (const auto m = doc.find("metadata"); m != doc.end() && !m->is_null()) {
    if (!m->is_object()) throw ParseError("metadata", "expected an object");
    if (const auto f = m->find("molecule_name"); f != m->end()) {
      if (!f->is_string()) throw ParseError("metadata.molecule_name", "expected a string");
      meta.molecule_name = f->get<std::string>();
    }
    if (m->contains("bond_distance_angstrom")) {
      meta.bond_distance_angstrom = require_number(*m, "bond_distance_angstrom", "metadata");
    }
    if (m->contains("reference_ground_energy")) {
      meta.reference_ground_energy = require_number(*m, "reference_ground_energy", "metadata");
    }
    if (const auto f = m->find("initial_state"); f != m->end()) {
      if (!f->is_string()) throw ParseError("metadata.initial_state", "expected a string");
      auto label = f->get<std::string>();
      if (static_cast<long long>(label.size()) != n_qubits) {
        throw ParseError("metadata.initial_state", "length must equal n_qubits");
      }
      try {
        (void)basis_index_from_label(label);
      } catch (const InputError& e) {
        throw ParseError("metadata.initial_state", e.what());
      }
      meta.initial_state = std::move(label);
    }
  }
  return Problem{std::move(h), std::move(meta)};
}

Problem load_pauli_sum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_pauli_sum(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + (e.where().empty() ? "" : ": " + e.where()), e.message());
  }
}

std::string serialize_pauli_sum(const PauliSum& h, const ProblemMetadata& metadata) {
  json doc;
  doc["n_qubits"] = h.n_qubits();
  json terms = json::array();
  for (const auto& t : h.terms()) terms.push_back({{"coeff_re", t.coefficient}, {"coeff_im", 0.0}, {"paulis", t.axes}});
  doc["terms"] = std::move(terms);

  json meta = json::object();
  if (metadata.molecule_name) meta["molecule_name"] = *metadata.molecule_name;
  if (metadata.bond_distance_angstrom) meta["bond_distance_angstrom"] = *metadata.bond_distance_angstrom;
  if (metadata.reference_ground_energy) meta["reference_ground_energy"] = *metadata.reference_ground_energy;
  if (metadata.initial_state) meta["initial_state"] = *metadata.initial_state;
  if (!meta.empty()) doc["metadata"] = std::move(meta);
  return doc.dump(2) + "\n";
}

std::uint64_t basis_index_from_label(std::string_view label) {
  if (label.empty() || label.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw InputError("basis label length out of range");
  }
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < label.size(); ++q) {
    if (label[q] == '1') {
      index |= std::uint64_t{1} << q;
    } else if (label[q] != '0') {
      throw InputError("basis label must contain only '0' and '1'");
    }
  }
  return index;
}

}  // namespace piqc::io
