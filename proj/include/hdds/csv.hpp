#pragma once

#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hdds {

/// Parsed CSV: header row plus data rows, fields as raw strings.
struct csv_table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// RFC-4180-style reader: quoted fields, doubled-quote escapes, embedded
/// commas and newlines, CRLF or LF line ends, optional UTF-8 BOM.
inline csv_table read_csv(std::istream& in) {
    csv_table table;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any_field = false;
    int ch;

    auto end_field = [&] {
        record.push_back(field);
        field.clear();
        any_field = false;
    };
    auto end_record = [&] {
        end_field();
        if (table.header.empty())
            table.header = std::move(record);
        else
            table.rows.push_back(std::move(record));
        record.clear();
    };

    // strip BOM
    if (in.peek() == 0xEF) {
        char bom[3];
        in.read(bom, 3);
        if (in.gcount() != 3 || bom[1] != char(0xBB) || bom[2] != char(0xBF))
            throw std::runtime_error("malformed byte-order mark");
    }

    bool saw_any = false;
    while ((ch = in.get()) != EOF) {
        saw_any = true;
        const char c = static_cast<char>(ch);
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    field += '"';
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                if (field.empty() && !any_field)
                    quoted = true;
                else
                    field += c;  // stray quote inside an unquoted field
                any_field = true;
                break;
            case ',':
                end_field();
                break;
            case '\r':
                if (in.peek() == '\n') in.get();
                end_record();
                break;
            case '\n':
                end_record();
                break;
            default:
                field += c;
                any_field = true;
        }
    }
    if (quoted)
        throw std::runtime_error("unterminated quoted field");
    if (!field.empty() || any_field || !record.empty())
        end_record();
    if (!saw_any)
        throw std::runtime_error("empty input");
    return table;
}

inline csv_table read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    return read_csv(in);
}

}  // namespace hdds
