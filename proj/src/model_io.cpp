#include "skgen/model_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace skgen {

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array() || j[field].empty())
        throw std::runtime_error(std::string("model file: missing or empty '") + field + "'");
    std::vector<std::string> out;
    for (const auto& v : j[field]) out.push_back(v.get<std::string>());
    return out;
}

}  // namespace

FiniteEdms parse_model(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("model file: invalid JSON: ") + e.what());
    }
    if (!j.contains("schema") || j["schema"] != kModelSchema)
        throw std::runtime_error("model file: expected schema 'edms-model/1'");
    auto states = string_list(j, "states");
    auto aa = string_list(j, "alphabet_a");
    auto ab = string_list(j, "alphabet_b");
    auto ae = string_list(j, "alphabet_e");
    if (!j.contains("joint") || !j["joint"].is_object())
        throw std::runtime_error("model file: missing 'joint' object");
    if (!j.contains("cost") || !j["cost"].is_object())
        throw std::runtime_error("model file: missing 'cost' object");

    const std::size_t per_state = aa.size() * ab.size() * ae.size();
    std::vector<double> joint;
    joint.reserve(states.size() * per_state);
    std::vector<double> cost;
    for (const auto& s : states) {
        if (!j["joint"].contains(s))
            throw std::runtime_error("model file: no joint table for state '" + s + "'");
        const auto& table = j["joint"][s];
        if (!table.is_array() || table.size() != per_state)
            throw std::runtime_error("model file: joint table for state '" + s + "' must have " +
                                     std::to_string(per_state) + " entries");
        for (const auto& v : table) joint.push_back(v.get<double>());
        if (!j["cost"].contains(s))
            throw std::runtime_error("model file: no cost for state '" + s + "'");
        cost.push_back(j["cost"][s].get<double>());
    }
    FiniteEdms model(std::move(states), std::move(aa), std::move(ab), std::move(ae),
                     std::move(joint), std::move(cost));
    model.validate();
    return model;
}

FiniteEdms load_model(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

FiniteEdms load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    return load_model(in);
}

std::string dump_model(const FiniteEdms& model) {
    json j;
    j["schema"] = kModelSchema;
    j["states"] = model.states();
    j["alphabet_a"] = model.alphabet_a();
    j["alphabet_b"] = model.alphabet_b();
    j["alphabet_e"] = model.alphabet_e();
    const std::size_t per_state = model.size_a() * model.size_b() * model.size_e();
    for (std::size_t s = 0; s < model.num_states(); ++s) {
        std::vector<double> table(model.joint().begin() + s * per_state,
                                  model.joint().begin() + (s + 1) * per_state);
        j["joint"][model.states()[s]] = table;
        j["cost"][model.states()[s]] = model.cost()[s];
    }
    return j.dump(2);
}

void save_model(const FiniteEdms& model, std::ostream& out) { out << dump_model(model) << "\n"; }

void save_model_file(const FiniteEdms& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write model file: " + path);
    save_model(model, out);
}

}  // namespace skgen
