#include "hbg/catalog.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hbg/girth.hpp"

namespace hbg {

using nlohmann::json;

std::optional<ChordIndexSpec> CatalogRecord::spec() const {
    if (!chords) return std::nullopt;
    return ChordIndexSpec{order, sym_factor, *chords};
}

std::string to_json_line(const CatalogRecord& record) {
    json j = json::object();
    j["schema"] = kCatalogSchema;
    j["g"] = record.girth;
    j["order"] = record.order;
    j["b"] = record.sym_factor;
    if (record.chords) j["chords"] = *record.chords;
    j["verdict"] = to_string(record.verdict);
    j["verified"] = record.verified;
    j["nodes"] = record.nodes;
    j["seconds"] = record.seconds;
    j["ts"] = record.timestamp;
    return j.dump();
}

CatalogRecord parse_record_line(std::string_view line) {
    try {
        const json j = json::parse(line);
        if (j.at("schema").get<int>() != kCatalogSchema) {
            throw Error(ErrorCode::CorruptStore, "unsupported schema " + j.at("schema").dump());
        }
        CatalogRecord r;
        r.girth = j.at("g").get<int>();
        r.order = j.at("order").get<int>();
        r.sym_factor = j.at("b").get<int>();
        if (j.contains("chords")) r.chords = j.at("chords").get<std::vector<int>>();
        const auto verdict = parse_verdict(j.at("verdict").get<std::string>());
        if (!verdict) throw Error(ErrorCode::CorruptStore, "unknown verdict " + j.at("verdict").dump());
        r.verdict = *verdict;
        r.verified = j.at("verified").get<bool>();
        r.nodes = j.at("nodes").get<std::uint64_t>();
        r.seconds = j.at("seconds").get<double>();
        r.timestamp = j.at("ts").get<std::string>();
        if ((r.verdict == Verdict::Exists) != r.chords.has_value()) {
            throw Error(ErrorCode::CorruptStore, "chords must be present exactly for Exists records");
        }
        return r;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::CorruptStore, std::string("malformed record: ") + e.what());
    }
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

CatalogRecord record_from_outcome(const SearchOutcome& outcome) {
    CatalogRecord r;
    r.girth = outcome.task.girth;
    r.order = outcome.task.order;
    r.sym_factor = outcome.task.sym_factor;
    if (outcome.witness) r.chords = outcome.witness->chords;
    r.verdict = outcome.verdict;
    r.verified = outcome.verdict != Verdict::Inconclusive;
    r.nodes = outcome.stats.nodes;
    r.seconds = outcome.stats.seconds;
    r.timestamp = utc_timestamp();
    return r;
}

bool verify_record(const CatalogRecord& record) {
    if (record.verdict != Verdict::Exists) return true;
    const auto spec = record.spec();
    if (!spec || !validate_spec(*spec).valid()) return false;
    return girth_symmetric(*spec).girth >= record.girth;
}

bool CatalogFilter::matches(const CatalogRecord& r) const {
    if (girth && r.girth != *girth) return false;
    if (order_min && r.order < *order_min) return false;
    if (order_max && r.order > *order_max) return false;
    if (verdict && r.verdict != *verdict) return false;
    return true;
}

namespace {

class FileLock {
public:
    explicit FileLock(int fd) : fd_(fd) { ::flock(fd_, LOCK_EX); }
    ~FileLock() { ::flock(fd_, LOCK_UN); }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_;
};

class Fd {
public:
    explicit Fd(int fd) : fd_(fd) {}
    ~Fd() {
        if (fd_ >= 0) ::close(fd_);
    }
    Fd(const Fd&) = delete;
    Fd& operator=(const Fd&) = delete;
    int get() const { return fd_; }

private:
    int fd_;
};

[[noreturn]] void io_error(const std::string& what, const std::filesystem::path& path) {
    throw Error(ErrorCode::Io, what + " " + path.string() + ": " + std::strerror(errno));
}

// Drops a trailing partial line left by an interrupted writer.
void trim_torn_tail(int fd, const std::filesystem::path& path) {
    struct stat st {};
    if (::fstat(fd, &st) != 0) io_error("cannot stat", path);
    off_t end = st.st_size;
    if (end == 0) return;
    char c = 0;
    if (::pread(fd, &c, 1, end - 1) != 1) io_error("cannot read", path);
    if (c == '\n') return;
    off_t keep = end - 1;
    while (keep > 0) {
        if (::pread(fd, &c, 1, keep - 1) != 1) io_error("cannot read", path);
        if (c == '\n') break;
        --keep;
    }
    if (::ftruncate(fd, keep) != 0) io_error("cannot truncate", path);
}

}  // namespace

CatalogRecord CatalogStore::append(CatalogRecord record) {
    if (record.verdict == Verdict::Exists) {
        if (!verify_record(record)) {
            throw Error(ErrorCode::VerificationFailed,
                        "chords [" + (record.chords ? format_chords(*record.chords) : std::string()) +
                            "] at order " + std::to_string(record.order) +
                            " do not reach girth " + std::to_string(record.girth));
        }
        record.verified = true;
    } else {
        record.chords.reset();
    }
    if (record.timestamp.empty()) record.timestamp = utc_timestamp();

    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    Fd fd(::open(path_.c_str(), O_RDWR | O_CREAT | O_APPEND | O_CLOEXEC, 0644));
    if (fd.get() < 0) io_error("cannot open", path_);
    FileLock lock(fd.get());
    trim_torn_tail(fd.get(), path_);
    const std::string line = to_json_line(record) + "\n";
    std::size_t written = 0;
    while (written < line.size()) {
        const ssize_t n = ::write(fd.get(), line.data() + written, line.size() - written);
        if (n < 0) {
            if (errno == EINTR) continue;
            io_error("cannot write", path_);
        }
        written += static_cast<std::size_t>(n);
    }
    if (::fsync(fd.get()) != 0) io_error("cannot sync", path_);
    return record;
}

std::vector<CatalogRecord> CatalogStore::load(const CatalogFilter& filter) const {
    std::vector<CatalogRecord> out;
    std::ifstream in(path_, std::ios::binary);
    if (!in) {
        if (!std::filesystem::exists(path_)) return out;
        throw Error(ErrorCode::Io, "cannot open " + path_.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    std::size_t pos = 0;
    int line_no = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) break;  // torn tail: not yet committed
        ++line_no;
        const std::string_view line(text.data() + pos, nl - pos);
        pos = nl + 1;
        if (line.empty()) continue;
        CatalogRecord record;
        try {
            record = parse_record_line(line);
        } catch (const Error& e) {
            throw Error(ErrorCode::CorruptStore,
                        path_.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
        if (!verify_record(record)) {
            throw Error(ErrorCode::CorruptStore, path_.string() + ":" + std::to_string(line_no) +
                                                     ": Exists record fails re-verification");
        }
        if (filter.matches(record)) out.push_back(std::move(record));
    }
    return out;
}

std::map<int, CatalogRecord> representatives(const std::vector<CatalogRecord>& records, int girth) {
    std::map<int, CatalogRecord> out;
    for (const auto& r : records) {
        if (r.girth != girth || r.verdict != Verdict::Exists) continue;
        auto [it, inserted] = out.emplace(r.order, r);
        if (!inserted && r.sym_factor > it->second.sym_factor) it->second = r;
    }
    return out;
}

}  // namespace hbg
