from regmaps.cli import main

main()
