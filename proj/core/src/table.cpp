#include "mpae/table.hpp"

#include "mpae/errors.hpp"
#include "mpae/util.hpp"

#include <sstream>

namespace mpae {

namespace {

constexpr uint64_t kDefaultCap = 1000000;

std::string header_field(const std::string& line, const std::string& key) {
    const std::string prefix = key + ": ";
    if (line.rfind(prefix, 0) != 0) {
        throw FormatError("table header: expected '" + key + ":', got '" + line + "'");
    }
    return line.substr(prefix.size());
}

uint64_t parse_count(const std::string& s) {
    uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw FormatError("table header: bad count '" + s + "'");
        v = v * 10 + static_cast<uint64_t>(c - '0');
    }
    return v;
}

} // namespace

std::string serialize_table(const TabularBenchmark& table) {
    std::ostringstream out;
    out << "mpae-table v1\n";
    out << "layers: " << table.layers << "\n";
    out << "intermediate_nodes: " << table.shape.num_intermediate_nodes << "\n";
    std::string labels;
    std::string costs;
    for (size_t i = 0; i < table.vocab.size(); ++i) {
        if (i) {
            labels += ',';
            costs += ',';
        }
        labels += table.vocab.labels[i];
        costs += dtos(table.vocab.costs[i]);
    }
    out << "ops: " << labels << "\n";
    out << "op_costs: " << costs << "\n";
    out << "objectives: " << table.num_objectives << "\n";
    out << "records: " << table.key_order.size() << "\n";
    for (const auto& key : table.key_order) {
        out << key;
        for (double v : table.lookup(key)) out << ' ' << dtos(v);
        out << '\n';
    }
    return out.str();
}

TabularBenchmark parse_table(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw FormatError("table: empty file");
    if (line != "mpae-table v1") {
        throw VersionMismatchError("table: unknown format line '" + line + "'");
    }
    TabularBenchmark t;
    auto next_line = [&]() {
        if (!std::getline(in, line)) throw FormatError("table: truncated header");
        return line;
    };
    t.layers = static_cast<uint32_t>(parse_count(header_field(next_line(), "layers")));
    t.shape.num_intermediate_nodes =
        static_cast<uint32_t>(parse_count(header_field(next_line(), "intermediate_nodes")));
    const auto labels = split(header_field(next_line(), "ops"), ',');
    const auto costs = split(header_field(next_line(), "op_costs"), ',');
    if (labels.size() != costs.size()) {
        throw FormatError("table: ops / op_costs arity mismatch");
    }
    t.vocab.labels = labels;
    for (const auto& c : costs) t.vocab.costs.push_back(stod_strict(c));
    t.shape.num_ops = static_cast<uint32_t>(labels.size());
    t.num_objectives = static_cast<uint32_t>(parse_count(header_field(next_line(), "objectives")));
    const uint64_t records = parse_count(header_field(next_line(), "records"));
    for (uint64_t r = 0; r < records; ++r) {
        if (!std::getline(in, line)) {
            throw FormatError("table: expected " + std::to_string(records) + " records, file ends at " +
                              std::to_string(r));
        }
        const auto fields = split(line, ' ');
        if (fields.size() != 1 + t.num_objectives) {
            throw FormatError("table: record has " + std::to_string(fields.size() - 1) +
                              " objectives, header says " + std::to_string(t.num_objectives));
        }
        ObjectiveVector v;
        for (size_t i = 1; i < fields.size(); ++i) v.push_back(stod_strict(fields[i]));
        t.insert(fields[0], std::move(v));
    }
    t.validate();
    return t;
}

void write_table(const std::filesystem::path& path, const TabularBenchmark& table) {
    atomic_write_file(path, serialize_table(table));
}

TabularBenchmark load_table(const std::filesystem::path& path) {
    return parse_table(read_file(path));
}

uint64_t count_architectures(const CellShape& shape, uint32_t layers, uint64_t cap) {
    if (layers < 1) throw ArgumentError("count_architectures: layers must be >= 1");
    const uint64_t effective_cap = cap == 0 ? kDefaultCap : cap;
    const uint64_t cells = count_valid_cells(shape, effective_cap);
    uint64_t total = 1;
    for (uint32_t l = 0; l < layers; ++l) {
        if (total > effective_cap / cells) {
            throw CapExceededError("architecture space (cells=" + std::to_string(cells) +
                                   ", layers=" + std::to_string(layers) + ") exceeds cap " +
                                   std::to_string(effective_cap));
        }
        total *= cells;
    }
    return total;
}

TabularBenchmark generate_table(const CellShape& shape, uint32_t layers,
                                const OpVocabulary& vocab, uint64_t landscape_seed,
                                double interaction_alpha, uint64_t cap) {
    count_architectures(shape, layers, cap);
    const SyntheticEvaluator eval(shape, vocab, landscape_seed, interaction_alpha);
    const auto cells = enumerate_valid_genomes(shape);

    TabularBenchmark t;
    t.shape = shape;
    t.layers = layers;
    t.vocab = vocab;
    t.num_objectives = 2;

    std::vector<size_t> idx(layers, 0);
    std::vector<Genome> picks(layers, cells[0]);
    while (true) {
        for (uint32_t l = 0; l < layers; ++l) picks[l] = cells[idx[l]];
        const FullArchitecture arch = compose(picks, layers);
        t.insert(architecture_key(arch, shape), eval.evaluate(arch));
        uint32_t l = layers;
        bool done = true;
        while (l > 0) {
            --l;
            if (++idx[l] < cells.size()) {
                done = false;
                break;
            }
            idx[l] = 0;
        }
        if (done) break;
    }
    return t;
}

} // namespace mpae
