#include "mpae/log.hpp"

#include "mpae/errors.hpp"
#include "mpae/util.hpp"

namespace mpae {

std::string LogRecord::to_line() const {
    std::string line = "I\t";
    line += std::to_string(generation);
    line += '\t';
    line += std::to_string(layer);
    line += '\t';
    line += std::to_string(id);
    line += '\t';
    line += origin_name(origin);
    line += '\t';
    line += genome_hex;
    line += '\t';
    for (size_t i = 0; i < objectives.size(); ++i) {
        if (i) line += ',';
        line += dtos(objectives[i]);
    }
    return line;
}

LogRecord parse_record_line(const std::string& line) {
    const auto fields = split(line, '\t');
    if (fields.size() != 7 || fields[0] != "I") {
        throw FormatError("log: not an individual record: '" + line + "'");
    }
    LogRecord r;
    r.generation = static_cast<uint32_t>(std::stoul(fields[1]));
    r.layer = static_cast<uint32_t>(std::stoul(fields[2]));
    r.id = std::stoull(fields[3]);
    r.origin = origin_from_name(fields[4]);
    r.genome_hex = fields[5];
    for (const auto& s : split(fields[6], ',')) r.objectives.push_back(stod_strict(s));
    return r;
}

EventLog::EventLog() {
    Fnv1a h;
    h.update(std::string(kHeaderLine) + "\n");
    hash_ = h.digest();
}

void EventLog::attach_file(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw IoError("cannot open log file: " + path.string());
    *file_ << kHeaderLine << '\n';
}

void EventLog::append_line(const std::string& line) {
    uint64_t state = hash_;
    for (char c : line) {
        state ^= static_cast<uint8_t>(c);
        state *= 0x100000001B3ull;
    }
    state ^= static_cast<uint8_t>('\n');
    state *= 0x100000001B3ull;
    hash_ = state;
    ++line_count_;
    if (keep_in_memory_) lines_.push_back(line);
    if (file_) *file_ << line << '\n';
}

void EventLog::append(const LogRecord& record) { append_line(record.to_line()); }

void EventLog::append_event(const std::string& kind, const std::string& payload) {
    append_line("E\t" + kind + "\t" + payload);
}

void EventLog::flush() {
    if (file_) file_->flush();
}

void EventLog::restore_counters(uint64_t hash, uint64_t line_count) {
    hash_ = hash;
    line_count_ = line_count;
    lines_.clear();
}

std::vector<LogRecord> read_log_records(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    std::vector<LogRecord> out;
    size_t start = 0;
    bool first = true;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        const std::string line = text.substr(start, end - start);
        start = end + 1;
        if (first) {
            if (line != EventLog::kHeaderLine) {
                throw VersionMismatchError("log: unknown header '" + line + "'");
            }
            first = false;
            continue;
        }
        if (line.empty() || line[0] != 'I') continue;
        out.push_back(parse_record_line(line));
    }
    return out;
}

} // namespace mpae
